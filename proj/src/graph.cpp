#include "wlp/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wlp/errors.hpp"

namespace wlp {

namespace {

constexpr int kMaxVertices = 62;  // adjacency masks live in one word

}  // namespace

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw invalid_input("negative vertex count");
  if (num_vertices > kMaxVertices) {
    throw invalid_input("vertex count exceeds " + std::to_string(kMaxVertices));
  }
  std::set<std::pair<int, int>> normalized;
  for (auto [u, v] : edges) {
    if (u == v) throw invalid_input("loop edge at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw invalid_input("edge endpoint out of range");
    }
    normalized.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(normalized.begin(), normalized.end());
  adjacency_.assign(static_cast<std::size_t>(num_vertices), 0);
  for (auto [u, v] : edges_) {
    adjacency_[u] |= std::uint64_t{1} << v;
    adjacency_[v] |= std::uint64_t{1} << u;
  }
}

bool Graph::adjacent(int u, int v) const {
  return (adjacency_.at(u) >> v) & 1;
}

MonomialIdeal to_ideal(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<Monomial> gens;
  for (int j = 0; j < n; ++j) gens.push_back(Monomial::variable(n, j, 2));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!graph.adjacent(u, v)) {
        gens.push_back(Monomial::variable(n, u) * Monomial::variable(n, v));
      }
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

Graph from_quadratic_ideal(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) {
    throw invalid_input("ideal is not Artinian");
  }
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != 2) {
      throw invalid_input("non-quadratic generator: " + g.str());
    }
  }
  const int n = ideal.num_vars();
  for (int j = 0; j < n; ++j) {
    if (!ideal.contains(Monomial::variable(n, j, 2))) {
      throw invalid_input("missing square of variable x" + std::to_string(j));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Monomial quadric = Monomial::variable(n, u) * Monomial::variable(n, v);
      if (!ideal.contains(quadric)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

void clique_rec(const Graph& graph, int first, std::uint64_t allowed,
                int remaining, std::vector<int>& current,
                const std::function<void(const std::vector<int>&)>& emit) {
  if (remaining == 0) {
    emit(current);
    return;
  }
  const int n = graph.num_vertices();
  for (int v = first; v <= n - remaining; ++v) {
    if (!((allowed >> v) & 1)) continue;
    current.push_back(v);
    clique_rec(graph, v + 1, allowed & graph.neighbor_mask(v), remaining - 1,
               current, emit);
    current.pop_back();
  }
}

std::uint64_t all_vertices_mask(const Graph& graph) {
  const int n = graph.num_vertices();
  return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
}

}  // namespace

std::vector<std::vector<int>> cliques(const Graph& graph, int k) {
  if (k < 0) throw invalid_input("clique size must be >= 0");
  std::vector<std::vector<int>> result;
  std::vector<int> current;
  clique_rec(graph, 0, all_vertices_mask(graph), k, current,
             [&](const std::vector<int>& c) { result.push_back(c); });
  return result;
}

std::int64_t count_cliques(const Graph& graph, int k) {
  std::int64_t count = 0;
  std::vector<int> current;
  clique_rec(graph, 0, all_vertices_mask(graph), k, current,
             [&](const std::vector<int>&) { ++count; });
  return count;
}

FVector f_vector(const Graph& graph) {
  FVector f;
  f.counts.push_back(1);
  for (int k = 1;; ++k) {
    const std::int64_t c = count_cliques(graph, k);
    if (c == 0) break;
    f.counts.push_back(c);
  }
  return f;
}

bool is_pure(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n == 0) return true;
  int maximal_size = -1;
  bool pure = true;
  std::vector<int> current;
  for (int k = 1; k <= n && pure; ++k) {
    clique_rec(graph, 0, all_vertices_mask(graph), k, current,
               [&](const std::vector<int>& c) {
                 std::uint64_t common = all_vertices_mask(graph);
                 for (int v : c) common &= graph.neighbor_mask(v);
                 if (common != 0) return;  // extendable, not maximal
                 if (maximal_size < 0) maximal_size = k;
                 if (k != maximal_size) pure = false;
               });
  }
  return pure;
}

namespace {

RelabeledGraph induced_subgraph(const Graph& graph, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  std::vector<int> new_index(graph.num_vertices(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : graph.edges()) {
    if (new_index[u] >= 0 && new_index[v] >= 0) {
      edges.emplace_back(new_index[u], new_index[v]);
    }
  }
  return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

void require_vertex(const Graph& graph, int v) {
  if (v < 0 || v >= graph.num_vertices()) {
    throw invalid_input("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

RelabeledGraph delete_star_vertex(const Graph& graph, int v) {
  require_vertex(graph, v);
  std::vector<int> keep;
  for (int w = 0; w < graph.num_vertices(); ++w) {
    if (w != v) keep.push_back(w);
  }
  return induced_subgraph(graph, std::move(keep));
}

RelabeledGraph link_vertex(const Graph& graph, int v) {
  require_vertex(graph, v);
  std::vector<int> keep;
  for (int w = 0; w < graph.num_vertices(); ++w) {
    if ((graph.neighbor_mask(v) >> w) & 1) keep.push_back(w);
  }
  return induced_subgraph(graph, std::move(keep));
}

Graph delete_star_edge(const Graph& graph, int u, int v) {
  require_vertex(graph, u);
  require_vertex(graph, v);
  if (!graph.adjacent(u, v)) {
    throw invalid_input("{" + std::to_string(u) + "," + std::to_string(v) +
                        "} is not an edge");
  }
  std::vector<std::pair<int, int>> edges;
  const auto removed = std::make_pair(std::min(u, v), std::max(u, v));
  for (const auto& e : graph.edges()) {
    if (e != removed) edges.push_back(e);
  }
  return Graph(graph.num_vertices(), std::move(edges));
}

RelabeledGraph link_edge(const Graph& graph, int u, int v) {
  require_vertex(graph, u);
  require_vertex(graph, v);
  if (!graph.adjacent(u, v)) {
    throw invalid_input("{" + std::to_string(u) + "," + std::to_string(v) +
                        "} is not an edge");
  }
  const std::uint64_t common = graph.neighbor_mask(u) & graph.neighbor_mask(v);
  std::vector<int> keep;
  for (int w = 0; w < graph.num_vertices(); ++w) {
    if ((common >> w) & 1) keep.push_back(w);
  }
  return induced_subgraph(graph, std::move(keep));
}

Graph cycle(int n) {
  if (n < 3) throw invalid_input("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw invalid_input("no parts given");
  int n = 0;
  for (int s : part_sizes) {
    if (s < 1) throw invalid_input("part sizes must be >= 1");
    n += s;
  }
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph cone(const Graph& graph, int t) {
  if (t < 0) throw invalid_input("cone needs t >= 0");
  const int n = graph.num_vertices();
  std::vector<std::pair<int, int>> edges = graph.edges();
  for (int a = 0; a < t; ++a) {
    for (int w = 0; w < n + a; ++w) edges.emplace_back(w, n + a);
  }
  return Graph(n + t, std::move(edges));
}

Graph togliatti_system_graph(int r, int i) {
  if (r < 3 || i < 1 || i > r - 2) {
    throw invalid_input("need r >= 3 and 1 <= i <= r-2");
  }
  return complete_multipartite({i + 1, r - i});
}

}  // namespace wlp
