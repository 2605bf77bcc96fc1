#include "mtutte/roots.hpp"

namespace mtutte {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int pow2(int n) { return Int(1) << n; }

// Roots are built in the standard orthonormal realization and then
// paired with the simple coroots, giving integer coordinates in the
// basis dual to the coroots.
struct Realization {
  int ambient = 0;                         // dimension of the e-basis
  std::vector<std::vector<Int>> roots;     // positive roots, e-coordinates
  std::vector<std::vector<Int>> coroots;   // simple coroots, e-coordinates
};

Realization realize(RootFamily family, int n) {
  Realization r;
  auto e = [&](int i, int j, Int a, Int b) {
    std::vector<Int> v(r.ambient);
    v[i] += a;
    if (j >= 0) v[j] += b;
    return v;
  };
  switch (family) {
    case RootFamily::A: {
      r.ambient = n + 1;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) r.roots.push_back(e(i, j, 1, -1));
      for (int i = 0; i < n; ++i) r.coroots.push_back(e(i, i + 1, 1, -1));
      break;
    }
    case RootFamily::B: {
      r.ambient = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          r.roots.push_back(e(i, j, 1, -1));
          r.roots.push_back(e(i, j, 1, 1));
        }
      for (int i = 0; i < n; ++i) r.roots.push_back(e(i, -1, 1, 0));
      for (int i = 0; i + 1 < n; ++i) r.coroots.push_back(e(i, i + 1, 1, -1));
      // short simple root e_n has coroot 2 e_n
      r.coroots.push_back(e(n - 1, -1, 2, 0));
      break;
    }
    case RootFamily::C: {
      r.ambient = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          r.roots.push_back(e(i, j, 1, -1));
          r.roots.push_back(e(i, j, 1, 1));
        }
      for (int i = 0; i < n; ++i) r.roots.push_back(e(i, -1, 2, 0));
      for (int i = 0; i + 1 < n; ++i) r.coroots.push_back(e(i, i + 1, 1, -1));
      // long simple root 2 e_n has coroot e_n
      r.coroots.push_back(e(n - 1, -1, 1, 0));
      break;
    }
    case RootFamily::D: {
      r.ambient = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          r.roots.push_back(e(i, j, 1, -1));
          r.roots.push_back(e(i, j, 1, 1));
        }
      for (int i = 0; i + 1 < n; ++i) r.coroots.push_back(e(i, i + 1, 1, -1));
      r.coroots.push_back(e(n - 2, n - 1, 1, 1));
      break;
    }
  }
  return r;
}

}  // namespace

RootFamily parse_root_family(const std::string& name) {
  if (name == "A" || name == "a") return RootFamily::A;
  if (name == "B" || name == "b") return RootFamily::B;
  if (name == "C" || name == "c") return RootFamily::C;
  if (name == "D" || name == "d") return RootFamily::D;
  throw precondition_error("unsupported root family '" + name + "'");
}

std::string family_name(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
  }
  return "?";
}

RootSystemSpec positive_roots(RootFamily family, int rank) {
  const int min_rank = family == RootFamily::A ? 1 : 2;
  if (rank < min_rank || rank > 8)
    throw precondition_error("unsupported rank for family " +
                             family_name(family));

  Realization re = realize(family, rank);
  std::vector<std::vector<Int>> coords;
  coords.reserve(re.roots.size());
  for (const auto& root : re.roots) {
    std::vector<Int> c(rank);
    for (int i = 0; i < rank; ++i) {
      Int dot = 0;
      for (int t = 0; t < re.ambient; ++t) dot += root[t] * re.coroots[i][t];
      c[i] = dot;
    }
    coords.push_back(std::move(c));
  }

  RootSystemSpec spec;
  spec.family = family;
  spec.rank = rank;
  spec.roots = lattice_list(rank, coords);
  switch (family) {
    case RootFamily::A: spec.weyl_order = factorial(rank + 1); break;
    case RootFamily::B:
    case RootFamily::C: spec.weyl_order = pow2(rank) * factorial(rank); break;
    case RootFamily::D: spec.weyl_order = pow2(rank - 1) * factorial(rank); break;
  }
  return spec;
}

WeylCheck weyl_check(RootFamily family, int rank) {
  RootSystemSpec spec = positive_roots(family, rank);
  WeylCheck out;
  out.m_at_1_0 = m_tutte_expansion(spec.roots).eval_int(1, 0);
  out.weyl_order = spec.weyl_order;
  out.equal = out.m_at_1_0 == out.weyl_order;
  return out;
}

}  // namespace mtutte
