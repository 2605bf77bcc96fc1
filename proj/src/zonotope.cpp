#include "mtutte/zonotope.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace mtutte {

namespace {

void require_lattice(const CharacterList& x, const char* what) {
  if (!x.group.is_lattice())
    throw precondition_error(std::string(what) +
                             " requires a lattice ambient group");
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// All index subsets of {0..n-1} of the given size, in lexicographic order.
void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Primitive kernel vector of the span of the n-1 independent columns,
// by cofactor expansion; sign fixed so the first nonzero entry is positive.
std::vector<Int> primitive_normal(const IntMatrix& cols) {
  const std::size_t n = cols.rows();
  std::vector<Int> xi(n);
  if (n == 1) {
    xi[0] = 1;
    return xi;
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c < n - 1; ++c) minor.at(mr, c) = cols.at(r, c);
      ++mr;
    }
    xi[i] = (i % 2 == 0) ? minor.determinant() : -minor.determinant();
  }
  Int g = 0;
  for (const Int& v : xi) g = gcd(g, v);
  if (g == 0) throw precondition_error("normal of a rank-deficient flat");
  for (Int& v : xi) v /= g;
  for (const Int& v : xi) {
    if (v == 0) continue;
    if (v < 0)
      for (Int& w : xi) w = -w;
    break;
  }
  return xi;
}

struct Box {
  std::vector<Int> lo, hi;
};

Box bounding_box(const CharacterList& x) {
  const int n = x.group.free_rank;
  Box b{std::vector<Int>(n), std::vector<Int>(n)};
  for (const GroupElement& e : x.elems)
    for (int i = 0; i < n; ++i) {
      if (e.free[i] < 0) b.lo[i] += e.free[i];
      if (e.free[i] > 0) b.hi[i] += e.free[i];
    }
  return b;
}

void scan_box(const Box& b, const std::function<void(const std::vector<Int>&)>& f) {
  const std::size_t n = b.lo.size();
  std::vector<Int> p = b.lo;
  if (n == 0) {
    f(p);
    return;
  }
  while (true) {
    f(p);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < b.hi[i]) {
        ++p[i];
        for (std::size_t j = i + 1; j < n; ++j) p[j] = b.lo[j];
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

bool FacetSystem::contains(const std::vector<Int>& p) const {
  for (const FacetEntry& e : entries) {
    Int v = dot(e.normal, p);
    if (v > e.h_plus || -v > e.h_minus) return false;
  }
  return true;
}

Int volume(const CharacterList& x) {
  require_lattice(x, "zonotope volume");
  const int n = x.group.free_rank;
  if (static_cast<int>(list_rank(x)) < n) return 0;
  Int vol = 0;
  for_each_combination(static_cast<int>(x.size()), n, [&](const std::vector<int>& idx) {
    vol += abs(free_matrix(x, idx).determinant());
  });
  return vol;
}

FacetSystem facet_system(const CharacterList& x) {
  require_lattice(x, "zonotope facet system");
  const int n = x.group.free_rank;
  FacetSystem fs;
  if (n == 0) return fs;
  if (static_cast<int>(list_rank(x)) != n)
    throw precondition_error("facet system requires a full-rank list");

  std::map<std::vector<Int>, bool> seen;
  auto add_direction = [&](const std::vector<Int>& xi) {
    if (seen.count(xi)) return;
    seen[xi] = true;
    FacetEntry e;
    e.normal = xi;
    for (const GroupElement& el : x.elems) {
      Int v = dot(xi, el.free);
      if (v > 0) e.h_plus += v;
      if (v < 0) e.h_minus -= v;
    }
    fs.entries.push_back(std::move(e));
  };

  if (n == 1) {
    add_direction({Int(1)});
    return fs;
  }
  for_each_combination(static_cast<int>(x.size()), n - 1,
                       [&](const std::vector<int>& idx) {
                         IntMatrix cols = free_matrix(x, idx);
                         if (rank(cols) != static_cast<std::size_t>(n - 1)) return;
                         add_direction(primitive_normal(cols));
                       });
  return fs;
}

LatticePointCount lattice_points(const CharacterList& x, bool collect) {
  require_lattice(x, "lattice point enumeration");
  const int n = x.group.free_rank;
  if (static_cast<int>(list_rank(x)) != n)
    throw precondition_error("lattice point count requires a full-rank list");
  FacetSystem fs = facet_system(x);
  LatticePointCount out{0, {}};
  scan_box(bounding_box(x), [&](const std::vector<Int>& p) {
    if (!fs.contains(p)) return;
    ++out.count;
    if (collect) out.points.push_back(p);
  });
  return out;
}

ZonotopeStratification stratification(const CharacterList& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  return stratification_with_order(x, order);
}

ZonotopeStratification stratification_with_order(const CharacterList& x,
                                                 const std::vector<int>& order) {
  require_lattice(x, "zonotope stratification");
  const int n = x.group.free_rank;
  if (static_cast<int>(list_rank(x)) != n)
    throw precondition_error("stratification requires a full-rank list");
  if (order.size() != x.size())
    throw precondition_error("shift order must permute the list positions");

  FacetSystem fs = facet_system(x);
  const std::size_t m = fs.entries.size();

  // <normal, epsilon> as a polynomial in the formal infinitesimal:
  // coefficient t is <normal, x_order[t]>.
  std::vector<std::vector<Int>> eps(m);
  for (std::size_t f = 0; f < m; ++f) {
    eps[f].reserve(order.size());
    for (int pos : order)
      eps[f].push_back(dot(fs.entries[f].normal, x.elems[pos].free));
  }

  // Sign of t + <normal, epsilon>, nonzero by genericity of the shift.
  auto shifted_sign = [&](const Int& t, std::size_t f, bool negated) {
    if (t != 0) return t < 0 ? -1 : 1;
    for (const Int& c : eps[f]) {
      if (c == 0) continue;
      bool neg = negated ? (c > 0) : (c < 0);
      return neg ? -1 : 1;
    }
    throw std::logic_error("facet normal orthogonal to the whole list");
  };

  ZonotopeStratification strat;
  strat.counts.assign(n + 1, 0);
  strat.total_in_z = 0;
  strat.volume = volume(x);

  bool origin_seen = false;
  std::vector<std::vector<Int>> tight;
  scan_box(bounding_box(x), [&](const std::vector<Int>& p) {
    bool in_z = true, in_shifted = true;
    tight.clear();
    for (std::size_t f = 0; f < m && (in_z || in_shifted); ++f) {
      const FacetEntry& e = fs.entries[f];
      Int v = dot(e.normal, p);
      if (v > e.h_plus || -v > e.h_minus) {
        in_z = in_shifted = false;
        break;
      }
      if (in_shifted) {
        if (shifted_sign(v - e.h_plus, f, false) > 0 ||
            shifted_sign(-v - e.h_minus, f, true) > 0)
          in_shifted = false;
      }
      if (v == e.h_plus || -v == e.h_minus) tight.push_back(e.normal);
    }
    if (in_z) ++strat.total_in_z;
    if (!in_shifted) return;

    bool is_origin =
        std::all_of(p.begin(), p.end(), [](const Int& v) { return v == 0; });
    if (is_origin) {
      // The origin is the distinguished codimension-n point.
      strat.counts[n] += 1;
      origin_seen = true;
      return;
    }
    int r = static_cast<int>(rank(IntMatrix::from_rows(tight, n)));
    strat.counts[std::min(r, n - 1)] += 1;
  });

  if (n > 0 && !origin_seen)
    throw std::logic_error("shifted zonotope misses the origin");
  if (n == 0) {
    // A point zonotope: the single point is its own 0-codimension stratum.
    strat.counts[0] = 1;
    strat.total_in_z = 1;
  }
  return strat;
}

std::map<std::vector<int>, Int> h_interior_counts(const CharacterList& x) {
  require_lattice(x, "interior point counts");
  const std::size_t k = x.size();
  if (list_rank(x) != k)
    throw precondition_error(
        "interior point counts are defined for independent lists");
  if (k > 20) throw precondition_error("list too long for exact enumeration");

  std::vector<Int> mult(std::size_t(1) << k);
  for (std::uint64_t mask = 0; mask < mult.size(); ++mask) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t(1) << i)) idx.push_back(static_cast<int>(i));
    mult[mask] = subset_multiplicity(x, idx);
  }

  std::map<std::vector<int>, Int> h;
  for (std::uint64_t a = 0; a < mult.size(); ++a) {
    Int v = 0;
    // Alternating sum over the sub-subsets of a.
    for (std::uint64_t b = a;; b = (b - 1) & a) {
      int diff = __builtin_popcountll(a) - __builtin_popcountll(b);
      v += (diff % 2) ? -mult[b] : mult[b];
      if (b == 0) break;
    }
    std::vector<int> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (a & (std::uint64_t(1) << i)) idx.push_back(static_cast<int>(i));
    h[idx] = v;
  }
  return h;
}

}  // namespace mtutte
