#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "mtutte/graph.hpp"
#include "mtutte/tutte.hpp"

namespace mtutte::testing {

inline std::mt19937 seeded(unsigned seed) { return std::mt19937(seed); }

inline int uniform(std::mt19937& gen, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen);
}

// Torsion chains with invariant factors drawn from {2, 3, 4, 6}.
inline std::vector<Int> random_torsion_chain(std::mt19937& gen, int max_len) {
  static const int factors[] = {2, 3, 4, 6};
  std::vector<Int> chain;
  int len = uniform(gen, 0, max_len);
  for (int i = 0; i < len; ++i) {
    std::vector<int> allowed;
    for (int f : factors)
      if (chain.empty() || Int(f) % chain.back() == 0) allowed.push_back(f);
    if (allowed.empty()) break;
    chain.push_back(allowed[uniform(gen, 0, static_cast<int>(allowed.size()) - 1)]);
  }
  return chain;
}

inline CharacterList random_lattice_list(std::mt19937& gen, int max_rank,
                                         int max_len, int max_entry,
                                         bool full_rank, bool allow_zero = true) {
  while (true) {
    int n = full_rank ? uniform(gen, 1, max_rank) : uniform(gen, 0, max_rank);
    int len = uniform(gen, full_rank ? n : 0, max_len);
    std::vector<std::vector<Int>> vecs;
    for (int i = 0; i < len; ++i) {
      std::vector<Int> v(n);
      for (int j = 0; j < n; ++j) v[j] = uniform(gen, -max_entry, max_entry);
      if (!allow_zero &&
          std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) {
        --i;
        continue;
      }
      vecs.push_back(std::move(v));
    }
    CharacterList x = lattice_list(n, vecs);
    if (!full_rank || list_rank(x) == static_cast<std::size_t>(n)) return x;
  }
}

inline CharacterList random_group_list(std::mt19937& gen, int max_rank,
                                       int max_len, int max_entry,
                                       int max_torsion_len = 2) {
  int n = uniform(gen, 0, max_rank);
  FgGroup g{n, random_torsion_chain(gen, max_torsion_len)};
  int len = uniform(gen, 0, max_len);
  std::vector<GroupElement> elems;
  for (int i = 0; i < len; ++i) {
    GroupElement e{std::vector<Int>(n), std::vector<Int>(g.torsion.size())};
    for (int j = 0; j < n; ++j) e.free[j] = uniform(gen, -max_entry, max_entry);
    for (std::size_t j = 0; j < g.torsion.size(); ++j)
      e.tors[j] = uniform(gen, 0, static_cast<int>(g.torsion[j]) - 1);
    elems.push_back(std::move(e));
  }
  return make_character_list(std::move(g), std::move(elems));
}

// Full-rank lists with every free part nonzero: the standing assumptions
// of the arrangement invariants.
inline CharacterList random_arrangement_list(std::mt19937& gen, int max_rank,
                                             int max_len, int max_entry,
                                             bool with_torsion) {
  while (true) {
    CharacterList x = with_torsion ? random_group_list(gen, max_rank, max_len,
                                                       max_entry, 1)
                                   : random_lattice_list(gen, max_rank, max_len,
                                                         max_entry, true);
    if (x.group.free_rank < 1 || x.elems.empty()) continue;
    if (list_rank(x) != static_cast<std::size_t>(x.group.free_rank)) continue;
    bool loopy = false;
    for (const GroupElement& e : x.elems)
      if (free_part_is_zero(e)) loopy = true;
    if (loopy) continue;
    return x;
  }
}

// Product of random elementary row operations; determinant +-1.
inline IntMatrix random_unimodular(std::mt19937& gen, int n, int ops = 8) {
  IntMatrix u = IntMatrix::identity(n);
  for (int k = 0; k < ops && n > 1; ++k) {
    int what = uniform(gen, 0, 3);
    int i = uniform(gen, 0, n - 1);
    int j = uniform(gen, 0, n - 1);
    if (what <= 1) {
      if (i == j) continue;
      u.add_row(i, j, Int(uniform(gen, 0, 1) ? 1 : -1) * uniform(gen, 1, 2));
    } else if (what == 2) {
      u.swap_rows(i, j);
    } else {
      u.negate_row(i);
    }
  }
  return u;
}

inline std::vector<int> random_permutation(std::mt19937& gen, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

inline CharacterList permuted(const CharacterList& x, const std::vector<int>& p) {
  CharacterList out{x.group, {}};
  for (int i : p) out.elems.push_back(x.elems[i]);
  return out;
}

// GCD of all k x k minors, straight from the definition.
inline Int minor_gcd(const IntMatrix& a, int k) {
  std::vector<int> ri(k), ci(k);
  Int g = 0;

  std::function<void(int, int)> cols = [&](int cpos, int cstart) {
    if (cpos == k) {
      IntMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
      g = gcd(g, sub.determinant());
      return;
    }
    for (int c = cstart; c < static_cast<int>(a.cols()); ++c) {
      ci[cpos] = c;
      cols(cpos + 1, c + 1);
    }
  };
  std::function<void(int, int)> rows = [&](int rpos, int rstart) {
    if (rpos == k) {
      cols(0, 0);
      return;
    }
    for (int r = rstart; r < static_cast<int>(a.rows()); ++r) {
      ri[rpos] = r;
      rows(rpos + 1, r + 1);
    }
  };
  rows(0, 0);
  return g;
}

// Rational solve S c = b for a full-column-rank S; throws if unsolvable.
inline std::vector<Rat> solve_in_basis(const IntMatrix& s,
                                       const std::vector<Int>& b) {
  const std::size_t m = s.rows(), n = s.cols();
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(s.at(i, j));
    a[i][n] = Rat(b[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of(n, m);
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rat inv = Rat(1) / a[row][col];
    for (std::size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat c = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= c * a[row][j];
    }
    pivot_of[col] = row;
    ++row;
  }
  std::vector<Rat> c(n);
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of[col] == m) throw std::logic_error("basis is rank deficient");
    c[col] = a[pivot_of[col]][n];
  }
  for (std::size_t i = row; i < m; ++i)
    if (a[i][n] != 0) throw std::logic_error("system is unsolvable");
  return c;
}

// The multigraph with every edge replicated label-many times.
struct ExpandedEdge {
  int u, v;
};

inline std::vector<ExpandedEdge> expand_multigraph(const LabeledGraph& g) {
  std::vector<ExpandedEdge> out;
  for (const auto& e : g.edges)
    for (Int c = 0; c < e.label; ++c) out.push_back({e.u, e.v});
  return out;
}

// Forests of the expanded multigraph, by backtracking over the edges.
inline Int brute_force_forests(const LabeledGraph& g) {
  std::vector<ExpandedEdge> edges = expand_multigraph(g);
  std::vector<int> parent(g.vertices);

  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::function<Int(std::size_t)> go = [&](std::size_t i) -> Int {
    if (i == edges.size()) return 1;
    Int total = go(i + 1);
    int ru = find(edges[i].u), rv = find(edges[i].v);
    if (ru != rv) {
      std::vector<int> saved = parent;
      parent[ru] = rv;
      total += go(i + 1);
      parent = saved;
    }
    return total;
  };
  std::iota(parent.begin(), parent.end(), 0);
  return go(0);
}

// Spanning trees of the expanded multigraph: subsets of size V-1 that
// connect everything.
inline Int brute_force_spanning_trees(const LabeledGraph& g) {
  std::vector<ExpandedEdge> edges = expand_multigraph(g);
  const int need = g.vertices - 1;
  if (need < 0) return 0;
  Int count = 0;
  std::vector<int> pick(need);

  std::function<void(int, int)> go = [&](int pos, int start) {
    if (pos == need) {
      std::vector<int> parent(g.vertices);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
      };
      int merged = 0;
      for (int e : pick) {
        int ru = find(edges[e].u), rv = find(edges[e].v);
        if (ru == rv) return;
        parent[ru] = rv;
        ++merged;
      }
      if (merged == need) ++count;
      return;
    }
    for (int e = start; e < static_cast<int>(edges.size()); ++e) {
      pick[pos] = e;
      go(pos + 1, e + 1);
    }
  };
  go(0, 0);
  return count;
}

inline LabeledGraph random_graph(std::mt19937& gen, int max_vertices,
                                 int max_edges, int max_label,
                                 bool simple = false) {
  while (true) {
    int v = uniform(gen, simple ? 2 : 1, max_vertices);
    int m = uniform(gen, 0, max_edges);
    LabeledGraph g{v, {}};
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
      int a = uniform(gen, 0, v - 1), b = uniform(gen, 0, v - 1);
      if (simple) {
        if (a == b) continue;
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue;
      }
      g.edges.push_back({a, b, Int(simple ? 1 : uniform(gen, 1, max_label))});
    }
    return g;
  }
}

inline BivarPoly crapo_sum(const std::vector<ActivityRecord>& records) {
  BivarPoly p;
  for (const ActivityRecord& r : records) p.add_term(r.internal, r.external, 1);
  return p;
}

}  // namespace mtutte::testing
