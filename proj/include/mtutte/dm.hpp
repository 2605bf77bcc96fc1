#pragma once

#include "mtutte/toric.hpp"

namespace mtutte {

// Graded dimensions of the space of quasipolynomials annihilated by the
// difference operators of the cocircuit complements: the coefficients of
// M_X(1, y). Their sum is the volume of the zonotope.
struct HilbertSeries {
  std::vector<Int> coefficients;  // by degree, ascending

  Int dimension() const {
    Int d = 0;
    for (const Int& c : coefficients) d += c;
    return d;
  }
  std::string to_string() const;
};

// Requires a lattice ambient of full rank.
HilbertSeries dm_hilbert_series(const CharacterList& x);

struct DmSummand {
  std::vector<Rat> point;  // angle coordinates of the 0-dimensional layer
  UniPoly series;          // T_{X_p}(1, y)
};

// The same series assembled point by point over the 0-dimensional layers
// of the arrangement; the identity with dm_hilbert_series is asserted.
struct DmDecomposition {
  HilbertSeries total;
  std::vector<DmSummand> summands;
};

DmDecomposition dm_decomposition_check(const CharacterList& x);

// Total dimension; equal to the zonotope volume.
Int dm_dimension(const CharacterList& x);

}  // namespace mtutte
