#include "mtutte/graph.hpp"

#include <cstdint>
#include <numeric>
#include <set>

namespace mtutte {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

void check_graph_enumerable(const LabeledGraph& g) {
  if (g.edges.size() > 24)
    throw precondition_error("graph too large for exact subset enumeration");
}

}  // namespace

void validate_graph(const LabeledGraph& g) {
  if (g.vertices < 0) throw precondition_error("negative vertex count");
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertices || e.v >= g.vertices)
      throw precondition_error("edge endpoint out of range");
    if (e.label < 1) throw precondition_error("edge labels must be positive");
  }
}

int edge_subset_rank(const LabeledGraph& g, const std::vector<int>& idx) {
  UnionFind uf(g.vertices);
  int r = 0;
  for (int i : idx)
    if (uf.unite(g.edges[i].u, g.edges[i].v)) ++r;
  return r;
}

bool is_connected(const LabeledGraph& g) {
  if (g.vertices <= 1) return true;
  std::vector<int> all(g.edges.size());
  std::iota(all.begin(), all.end(), 0);
  return edge_subset_rank(g, all) == g.vertices - 1;
}

BivarPoly graph_m_tutte(const LabeledGraph& g) {
  validate_graph(g);
  check_graph_enumerable(g);
  const std::size_t m = g.edges.size();
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  const int re = edge_subset_rank(g, all);

  BivarPoly p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<int> idx;
    Int mult = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t(1) << i)) {
        idx.push_back(static_cast<int>(i));
        mult *= g.edges[i].label;
      }
    int r = edge_subset_rank(g, idx);
    add_shifted_term(p, mult, re - r, static_cast<int>(idx.size()) - r);
  }
  return p;
}

BivarPoly graph_m_tutte_deletion_contraction(const LabeledGraph& g) {
  validate_graph(g);
  check_graph_enumerable(g);
  const std::size_t m = g.edges.size();
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  const int re = edge_subset_rank(g, all);

  // Pivot: first edge that is neither a loop nor a bridge.
  int pivot = -1;
  for (std::size_t i = 0; i < m; ++i) {
    if (g.edges[i].u == g.edges[i].v) continue;
    std::vector<int> rest;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) rest.push_back(static_cast<int>(j));
    if (edge_subset_rank(g, rest) == re) {
      pivot = static_cast<int>(i);
      break;
    }
  }
  if (pivot < 0) return graph_m_tutte(g);

  LabeledGraph deleted{g.vertices, {}};
  for (std::size_t j = 0; j < m; ++j)
    if (static_cast<int>(j) != pivot) deleted.edges.push_back(g.edges[j]);

  // Contract by merging the larger endpoint into the smaller one.
  const int keep = std::min(g.edges[pivot].u, g.edges[pivot].v);
  const int gone = std::max(g.edges[pivot].u, g.edges[pivot].v);
  LabeledGraph contracted{g.vertices - 1, {}};
  auto relabel = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  for (const auto& e : deleted.edges)
    contracted.edges.push_back({relabel(e.u), relabel(e.v), e.label});

  return graph_m_tutte_deletion_contraction(deleted) +
         BivarPoly::constant(g.edges[pivot].label) *
             graph_m_tutte_deletion_contraction(contracted);
}

Int spanning_tree_count(const LabeledGraph& g) {
  validate_graph(g);
  if (!is_connected(g))
    throw precondition_error("spanning trees require a connected graph");
  return graph_m_tutte(g).eval_int(1, 1);
}

Int forest_count(const LabeledGraph& g) {
  validate_graph(g);
  return graph_m_tutte(g).eval_int(2, 1);
}

CharacterList graph_to_vectors(const LabeledGraph& g) {
  validate_graph(g);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u == e.v)
      throw precondition_error("the vector realization requires a loopless graph");
    if (e.label != 1)
      throw precondition_error("the vector realization requires unit labels");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw precondition_error("the vector realization requires a simple graph");
  }
  std::vector<std::vector<Int>> vectors;
  vectors.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    std::vector<Int> v(g.vertices);
    v[e.u] = 1;
    v[e.v] = -1;
    vectors.push_back(std::move(v));
  }
  return lattice_list(g.vertices, vectors);
}

}  // namespace mtutte
