#include "mtutte/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace mtutte {

UniPoly::UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Int c) { return UniPoly(std::vector<Int>{std::move(c)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void UniPoly::add_term(int k, const Int& c) {
  if (c == 0) return;
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1);
  c_[k] += c;
  trim();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
  return v;
}

Int UniPoly::eval_int(const Int& x) const {
  Int v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Int& coeff,
                 const std::string& vars) {
  Int a = coeff < 0 ? Int(-coeff) : coeff;
  if (first) {
    if (coeff < 0) os << '-';
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (vars.empty()) {
    os << a;
  } else if (a == 1) {
    os << vars;
  } else {
    os << a << '*' << vars;
  }
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string UniPoly::to_string(const std::string& var, bool descending) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](int k) {
    if (c_[k] == 0) return;
    append_term(os, first, c_[k], power(var, k));
    first = false;
  };
  if (descending)
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) emit(k);
  else
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) emit(k);
  return os.str();
}

BivarPoly BivarPoly::constant(Int c) {
  BivarPoly p;
  p.add_term(0, 0, c);
  return p;
}

Int BivarPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Int(0) : it->second;
}

void BivarPoly::add_term(int i, int j, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [k, v] : o.c_) r.add_term(k.first, k.second, v);
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [k, v] : o.c_) r.add_term(k.first, k.second, -v);
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (const auto& [a, u] : c_)
    for (const auto& [b, v] : o.c_)
      r.add_term(a.first + b.first, a.second + b.second, u * v);
  return r;
}

int BivarPoly::x_degree() const {
  int d = 0;
  for (const auto& [k, v] : c_) d = std::max(d, k.first);
  return d;
}

int BivarPoly::y_degree() const {
  int d = 0;
  for (const auto& [k, v] : c_) d = std::max(d, k.second);
  return d;
}

Rat BivarPoly::eval(const Rat& x, const Rat& y) const {
  Rat v = 0;
  for (const auto& [k, c] : c_) {
    Rat t(c);
    for (int i = 0; i < k.first; ++i) t *= x;
    for (int j = 0; j < k.second; ++j) t *= y;
    v += t;
  }
  return v;
}

Int BivarPoly::eval_int(const Int& x, const Int& y) const {
  Int v = 0;
  for (const auto& [k, c] : c_) {
    Int t = c;
    for (int i = 0; i < k.first; ++i) t *= x;
    for (int j = 0; j < k.second; ++j) t *= y;
    v += t;
  }
  return v;
}

UniPoly BivarPoly::specialize_y(const Int& y0) const {
  UniPoly p;
  for (const auto& [k, c] : c_) {
    Int t = c;
    for (int j = 0; j < k.second; ++j) t *= y0;
    p.add_term(k.first, t);
  }
  return p;
}

UniPoly BivarPoly::specialize_x(const Int& x0) const {
  UniPoly p;
  for (const auto& [k, c] : c_) {
    Int t = c;
    for (int i = 0; i < k.first; ++i) t *= x0;
    p.add_term(k.second, t);
  }
  return p;
}

std::string BivarPoly::to_string() const {
  if (c_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Int>> terms(c_.begin(), c_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second;
    int tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string vars = power("x", k.first);
    std::string py = power("y", k.second);
    if (!vars.empty() && !py.empty()) vars += "*" + py;
    else if (!py.empty()) vars = py;
    append_term(os, first, c, vars);
    first = false;
  }
  return os.str();
}

void add_shifted_term(BivarPoly& p, const Int& c, int a, int b) {
  if (c == 0) return;
  for (int i = 0; i <= a; ++i) {
    Int ci = c * binomial(a, i);
    if ((a - i) % 2) ci = -ci;
    for (int j = 0; j <= b; ++j) {
      Int cij = ci * binomial(b, j);
      if ((b - j) % 2) cij = -cij;
      p.add_term(i, j, cij);
    }
  }
}

}  // namespace mtutte
