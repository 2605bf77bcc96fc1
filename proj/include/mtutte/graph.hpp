#pragma once

#include "mtutte/tutte.hpp"

namespace mtutte {

// Finite graph with positive integer edge labels; loops and parallel
// edges allowed. The rank of an edge set is |V| minus its number of
// connected components, and the multiplicity of an edge set is the
// product of its labels.
struct LabeledGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    Int label = 1;
  };
  int vertices = 0;
  std::vector<Edge> edges;
};

void validate_graph(const LabeledGraph& g);

int edge_subset_rank(const LabeledGraph& g, const std::vector<int>& idx);
bool is_connected(const LabeledGraph& g);

// Sum over edge subsets of (prod of labels) (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
BivarPoly graph_m_tutte(const LabeledGraph& g);

// Same polynomial by deletion-contraction on the first edge, in input
// order, that is neither a loop nor a bridge; lists of loops and bridges
// are finished by direct expansion.
BivarPoly graph_m_tutte_deletion_contraction(const LabeledGraph& g);

// M_G(1,1): the spanning trees of the graph with every edge replicated
// label-many times. Connected graphs only.
Int spanning_tree_count(const LabeledGraph& g);

// M_G(2,1): the forests of the replicated graph.
Int forest_count(const LabeledGraph& g);

// Vector realization of a simple unlabeled graph: edge (u, v) becomes
// e_u - e_v. The ordinary Tutte polynomial of the list equals the graph
// polynomial.
CharacterList graph_to_vectors(const LabeledGraph& g);

}  // namespace mtutte
