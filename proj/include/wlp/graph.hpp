#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wlp/monomial.hpp"

namespace wlp {

// A finite simple graph on vertices 0..n-1, encoding the flag complex whose
// faces are the cliques. Edge sets are kept as sorted pair lists plus an
// adjacency mask per vertex so that iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const;
  // Bitmask of neighbors of v.
  std::uint64_t neighbor_mask(int v) const { return adjacency_[v]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adjacency_;
};

// Face counts of the flag complex by cardinality: counts[k] is the number of
// k-cliques, so counts[0] = 1 for the empty face and the sequence ends at
// the clique number. counts[i] equals dim A_i of the associated algebra.
struct FVector {
  std::vector<std::int64_t> counts;

  std::int64_t faces_of_size(int k) const {
    return k >= 0 && k < static_cast<int>(counts.size()) ? counts[k] : 0;
  }
  friend bool operator==(const FVector&, const FVector&) = default;
};

// Squares of all variables plus one squarefree quadric per NON-edge. The
// result is Artinian and quadratic; its standard monomials are the cliques.
MonomialIdeal to_ideal(const Graph& graph);

// Inverse of to_ideal. Rejects ideals that are not quadratic or that miss a
// square, with a diagnostic naming the offender.
Graph from_quadratic_ideal(const MonomialIdeal& ideal);

// All k-cliques as sorted vertex lists, in lexicographic order. k = 0 yields
// the single empty face. This order matches the canonical monomial order of
// the squarefree degree-k standard monomials.
std::vector<std::vector<int>> cliques(const Graph& graph, int k);

std::int64_t count_cliques(const Graph& graph, int k);

FVector f_vector(const Graph& graph);

// True iff all inclusion-maximal cliques have the same size.
bool is_pure(const Graph& graph);

// A graph produced by deleting or linking, together with the relabeling:
// vertex_map[new_index] = old vertex id, ascending.
struct RelabeledGraph {
  Graph graph;
  std::vector<int> vertex_map;
};

// Induced subgraph on all vertices but v: the flag complex loses st(v).
RelabeledGraph delete_star_vertex(const Graph& graph, int v);

// Induced subgraph on the neighbors of v: the flag complex of lk(v).
RelabeledGraph link_vertex(const Graph& graph, int v);

// The same vertex set with edge {u,v} removed: the flag complex loses
// st(e). Rejects non-edges.
Graph delete_star_edge(const Graph& graph, int u, int v);

// Induced subgraph on the common neighbors of u and v: lk(e). Rejects
// non-edges.
RelabeledGraph link_edge(const Graph& graph, int u, int v);

// Named constructors.
Graph cycle(int n);                                      // n >= 3
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph cone(const Graph& graph, int t);                   // t new apex vertices

// The graph of the quadric ideal <x_0..x_i>^2 + <x_{i+1}..x_r>^2, i.e. the
// complete bipartite graph K_{i+1, r-i}. These are the classical Togliatti
// systems of quadrics; the algebra fails injectivity from degree 1.
Graph togliatti_system_graph(int r, int i);              // 1 <= i <= r-2

}  // namespace wlp
