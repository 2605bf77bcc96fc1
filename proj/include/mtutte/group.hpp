#pragma once

#include <string>
#include <vector>

#include "mtutte/lattice.hpp"
#include "mtutte/matrix.hpp"

namespace mtutte {

// A finitely generated abelian group Z^free_rank x Z/q_1 x ... x Z/q_s
// in invariant-factor form: every q_i >= 2 and q_i | q_{i+1}.
struct FgGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  std::size_t coord_count() const { return free_rank + torsion.size(); }
  bool is_lattice() const { return torsion.empty(); }
  Int torsion_order() const {
    Int p = 1;
    for (const Int& q : torsion) p *= q;
    return p;
  }

  bool operator==(const FgGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const FgGroup& o) const { return !(*this == o); }
};

// Throws precondition_error unless the invariant-factor chain holds.
void validate_group(const FgGroup& g);

struct GroupElement {
  std::vector<Int> free;
  std::vector<Int> tors;

  bool operator==(const GroupElement& o) const {
    return free == o.free && tors == o.tors;
  }
  bool operator<(const GroupElement& o) const {
    if (free != o.free) return free < o.free;
    return tors < o.tors;
  }
};

GroupElement make_element(const FgGroup& g, std::vector<Int> free,
                          std::vector<Int> tors);
GroupElement zero_element(const FgGroup& g);
GroupElement negate(const FgGroup& g, const GroupElement& e);

// Torsion residues reduced into [0, q_i); shape checked.
GroupElement reduce_element(const FgGroup& g, GroupElement e);
bool is_zero(const GroupElement& e);
bool free_part_is_zero(const GroupElement& e);

// Coordinates (free part followed by torsion residues) as one vector.
std::vector<Int> coordinates(const FgGroup& g, const GroupElement& e);

// Columns presenting <A> + relations inside Z^(n+s): one column per
// element of A, then one relation column q_i * e_{n+i} per torsion factor.
IntMatrix presentation_columns(const FgGroup& g,
                               const std::vector<GroupElement>& elems);

// m(A): the index of the subgroup generated by A in the largest subgroup
// of g where that index is finite. Equals the order of the torsion part
// of g / <A>, read off the Smith form of the presentation.
Int multiplicity(const FgGroup& g, const std::vector<GroupElement>& elems);

// Coordinate map onto a quotient group in invariant-factor form.
struct QuotientMap {
  FgGroup source;      // shape the input coordinates are written in
  FgGroup target;
  IntMatrix transform; // coord_count(target) x coord_count(source)

  GroupElement apply(const GroupElement& e) const;
};

// g / <lambda> with a reusable projection for whole lists.
QuotientMap quotient_by(const FgGroup& g, const GroupElement& lambda);

// Invariant-factor normal form of Z^free_rank x Z/t_1 x ... x Z/t_k for
// arbitrary moduli t_i >= 1 (neither the chain condition nor t_i >= 2 is
// required of the input).
QuotientMap normalize_presentation(int free_rank, const std::vector<Int>& torsion);

}  // namespace mtutte
