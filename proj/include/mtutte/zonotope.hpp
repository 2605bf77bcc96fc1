#pragma once

#include <map>
#include <vector>

#include "mtutte/tutte.hpp"

namespace mtutte {

// One slab of the H-description of the zonotope: for every point p of
// Z(X), -h_minus <= <normal, p> <= h_plus. Normals are the primitive
// orthogonals of the rank n-1 flats spanned by sublists, one entry per
// line of directions, sign-canonicalized (first nonzero positive).
struct FacetEntry {
  std::vector<Int> normal;
  Int h_plus;   // sum of max(0, <normal, x>) over the list
  Int h_minus;  // sum of max(0, -<normal, x>)
};

struct FacetSystem {
  std::vector<FacetEntry> entries;

  bool contains(const std::vector<Int>& p) const;
};

// Volume of Z(X) as the sum of |det B| over the bases extracted from X.
// Requires a lattice ambient; rank-deficient lists have volume 0.
Int volume(const CharacterList& x);

FacetSystem facet_system(const CharacterList& x);

struct LatticePointCount {
  Int count;
  std::vector<std::vector<Int>> points;  // filled on request, lex order
};

// Exact count of Z(X) and the integer lattice: bounding-box scan
// filtered through the facet system. Requires full rank.
LatticePointCount lattice_points(const CharacterList& x, bool collect = false);

struct ZonotopeStratification {
  std::vector<Int> counts;  // |I_0| ... |I_n| by face codimension
  Int total_in_z;           // |Z(X) cap lattice|
  Int volume;               // basis-determinant sum
};

// Counts of the lattice points of the generically shifted zonotope,
// stratified by the codimension of the smallest face of Z(X) they touch.
// The shift is symbolic: epsilon = sum_i delta^i x_i for a formal
// infinitesimal delta, compared lexicographically, so no numeric epsilon
// is ever chosen. The origin is the unique codimension-n point.
ZonotopeStratification stratification(const CharacterList& x);

// Same, with the powers of delta assigned along the given permutation of
// list positions. The counts do not depend on the choice.
ZonotopeStratification stratification_with_order(const CharacterList& x,
                                                 const std::vector<int>& order);

// Interior lattice-point counts h(A) of the faces Z(A) of a
// parallelepiped, by inclusion-exclusion over the multiplicities of the
// subsets. Defined for linearly independent lists only.
std::map<std::vector<int>, Int> h_interior_counts(const CharacterList& x);

}  // namespace mtutte
