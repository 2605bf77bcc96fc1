#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mtutte/numeric.hpp"

namespace mtutte {

// Dense integer matrix, row major. Sized once at construction; empty
// dimensions (0 rows or 0 columns) are legal everywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<Int>>& cols);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> column(std::size_t j) const;

  IntMatrix transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += c * row j
  void add_row(std::size_t i, std::size_t j, const Int& c);
  // col i += c * col j
  void add_col(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;

  bool is_zero() const;
  // GCD of all entries (0 for an empty or zero matrix).
  Int content() const;
  // Determinant by fraction-free elimination; square matrices only,
  // the empty 0x0 matrix has determinant 1.
  Int determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace mtutte
