#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mtutte/numeric.hpp"

namespace mtutte {

// Dense univariate integer polynomial, coefficients by ascending degree,
// trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs);
  static UniPoly constant(Int c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  Int coeff(int k) const;
  void add_term(int k, const Int& c);
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;

  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;

  std::string to_string(const std::string& var, bool descending = true) const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Sparse bivariate integer polynomial in x and y. Canonical: no stored
// zero coefficients, so equality is map equality.
class BivarPoly {
 public:
  BivarPoly() = default;
  static BivarPoly constant(Int c);

  Int coeff(int i, int j) const;
  void add_term(int i, int j, const Int& c);
  const std::map<std::pair<int, int>, Int>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool operator==(const BivarPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;

  int x_degree() const;
  int y_degree() const;

  Rat eval(const Rat& x, const Rat& y) const;
  Int eval_int(const Int& x, const Int& y) const;

  // Substitute a value for one variable, leaving a polynomial in the other.
  UniPoly specialize_y(const Int& y0) const;
  UniPoly specialize_x(const Int& x0) const;

  // Terms sorted by (total degree desc, x-exponent desc), e.g.
  // "x^2 + 2*y^2 + 4*x + 4*y + 3". Golden format for the CLI.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Int> c_;
};

// Adds c * (x-1)^a * (y-1)^b; the shared accumulation step of every
// corank/nullity expansion in the library.
void add_shifted_term(BivarPoly& p, const Int& c, int a, int b);

}  // namespace mtutte
