#include "mtutte/lattice.hpp"

#include <cstdlib>
#include <optional>

namespace mtutte {

namespace {

// Index of the row in [from, rows) with minimal nonzero |entry| in
// column col; ties go to the smaller row index.
std::optional<std::size_t> pivot_row(const IntMatrix& m, std::size_t from,
                                     std::size_t col) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m.at(i, col) == 0) continue;
    if (!best || abs(m.at(i, col)) < abs(m.at(*best, col))) best = i;
  }
  return best;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& A) {
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < H.rows(); ++col) {
    // Euclid down the column until a single nonzero entry remains.
    while (true) {
      auto p = pivot_row(H, row, col);
      if (!p) break;
      if (*p != row) {
        H.swap_rows(row, *p);
        U.swap_rows(row, *p);
      }
      bool below = false;
      for (std::size_t i = row + 1; i < H.rows(); ++i) {
        if (H.at(i, col) == 0) continue;
        Int q = H.at(i, col) / H.at(row, col);
        H.add_row(i, row, -q);
        U.add_row(i, row, -q);
        if (H.at(i, col) != 0) below = true;
      }
      if (!below) break;
    }
    if (H.at(row, col) == 0) continue;
    if (H.at(row, col) < 0) {
      H.negate_row(row);
      U.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(H.at(i, col), H.at(row, col));
      if (q != 0) {
        H.add_row(i, row, -q);
        U.add_row(i, row, -q);
      }
    }
    ++row;
  }
  return {H, U};
}

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  IntMatrix V = IntMatrix::identity(A.cols());
  const std::size_t nmin = std::min(A.rows(), A.cols());

  auto find_pivot = [&D](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < D.rows(); ++i)
      for (std::size_t j = t; j < D.cols(); ++j) {
        if (D.at(i, j) == 0) continue;
        if (!best || abs(D.at(i, j)) < abs(D.at(best->first, best->second)))
          best = {{i, j}};
      }
    return best;
  };

  for (std::size_t t = 0; t < nmin; ++t) {
    auto pv = find_pivot(t);
    if (!pv) break;
    D.swap_rows(t, pv->first);
    U.swap_rows(t, pv->first);
    D.swap_cols(t, pv->second);
    V.swap_cols(t, pv->second);

    while (true) {
      // Clear column t, restarting whenever a smaller remainder shows up.
      bool dirty = false;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D.at(i, t) != 0) {
          D.swap_rows(t, i);
          U.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D.at(t, j) != 0) {
          D.swap_cols(t, j);
          V.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Pivot is lone; force it to divide the rest of the submatrix.
      bool fixed = true;
      for (std::size_t i = t + 1; i < D.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < D.cols() && fixed; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            D.add_row(t, i, 1);
            U.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }

  SmithDecomposition res{U, V, {}};
  for (std::size_t t = 0; t < nmin; ++t)
    if (D.at(t, t) != 0) res.invariants.push_back(D.at(t, t));
  return res;
}

std::size_t rank(const IntMatrix& A) {
  // Integer row echelon without transform bookkeeping.
  IntMatrix H = A;
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < H.rows(); ++col) {
    while (true) {
      auto p = pivot_row(H, row, col);
      if (!p) break;
      H.swap_rows(row, *p);
      bool below = false;
      for (std::size_t i = row + 1; i < H.rows(); ++i) {
        if (H.at(i, col) == 0) continue;
        Int q = H.at(i, col) / H.at(row, col);
        H.add_row(i, row, -q);
        if (H.at(i, col) != 0) below = true;
      }
      if (!below) break;
    }
    if (H.at(row, col) != 0) ++row;
  }
  return row;
}

IntMatrix hermite_row_basis(const IntMatrix& A) {
  HermiteResult hr = hermite_normal_form(A);
  std::size_t r = 0;
  for (std::size_t i = 0; i < hr.H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hr.H.cols(); ++j)
      if (hr.H.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++r;
  }
  IntMatrix basis(r, hr.H.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < hr.H.cols(); ++j) basis.at(i, j) = hr.H.at(i, j);
  return basis;
}

IntMatrix saturation(const IntMatrix& A) {
  const std::size_t n = A.rows();
  SmithDecomposition s = smith_normal_form(A);
  const std::size_t r = s.invariants.size();
  // The real span of the columns is Uinv * {y : y_i = 0 for i >= r}, so
  // the first r columns of Uinv generate the saturated lattice.
  IntMatrix uinv = unimodular_inverse(s.U);
  IntMatrix gens(r, n);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i) gens.at(k, i) = uinv.at(i, k);
  return hermite_row_basis(gens).transposed();
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
  if (U.rows() != U.cols()) throw precondition_error("inverse of non-square matrix");
  const std::size_t n = U.rows();
  // Rational Gauss-Jordan; the result must come out integral.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(U.at(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw precondition_error("matrix is singular");
    std::swap(a[p], a[k]);
    Rat inv = Rat(1) / a[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat c = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= c * a[k][j];
    }
  }
  IntMatrix res(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = a[i][n + j];
      if (!is_integer(v)) throw precondition_error("matrix is not unimodular");
      res.at(i, j) = numerator(v);
    }
  return res;
}

}  // namespace mtutte
