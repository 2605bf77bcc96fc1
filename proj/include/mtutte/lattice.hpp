#pragma once

#include <vector>

#include "mtutte/matrix.hpp"

namespace mtutte {

// Row-style Hermite normal form: U*A = H with U unimodular, H in row
// echelon form with positive pivots and the entries above each pivot
// reduced into [0, pivot). H is a canonical function of the row lattice
// of A; column lattices are canonicalized by transposing first.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
};

HermiteResult hermite_normal_form(const IntMatrix& A);

// U*A*V diagonal with positive invariants d_1 | d_2 | ... | d_r.
// |det U| = |det V| = 1. Pivot selection (minimal nonzero absolute
// value, ties broken by row then column index) is deterministic, so the
// decomposition is reproducible.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  std::vector<Int> invariants;

  Int invariant_product() const {
    Int p = 1;
    for (const Int& d : invariants) p *= d;
    return p;
  }
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

// Canonical (Hermite) basis of the lattice spanned by the rows of A;
// zero rows dropped, result has rank(A) rows.
IntMatrix hermite_row_basis(const IntMatrix& A);

// Canonical basis, as columns, of the saturation of the column lattice
// of A: the largest sublattice of Z^rows in which the columns of A span
// a finite-index subgroup.
IntMatrix saturation(const IntMatrix& A);

// Exact inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& U);

}  // namespace mtutte
