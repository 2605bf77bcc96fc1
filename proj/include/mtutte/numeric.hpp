#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mtutte {

// All arithmetic in this library is exact. Integers are arbitrary
// precision, rationals are normalized fractions over them.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Input that cannot be parsed (bad JSON, wrong shapes, bad numbers).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation does not hold.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& msg)
      : std::invalid_argument(msg) {}
};

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Quotient rounded toward negative infinity; b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nonnegative remainder of a modulo m > 0.
inline Int pos_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace mtutte
