#pragma once

#include <random>
#include <vector>

#include "wlp/census.hpp"
#include "wlp/graph.hpp"
#include "wlp/monomial.hpp"

namespace wlp::test {

inline Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

inline MonomialIdeal ideal_of(int vars, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(Monomial(std::move(g)));
  return MonomialIdeal(vars, std::move(ms));
}

// squares of all six variables plus x0x1, x2x3, x4x5: Hilbert (1,6,12,8)
inline MonomialIdeal octahedron_ideal() {
  return to_ideal(complete_multipartite({2, 2, 2}));
}

// squares plus x0x1, x2x3: Hilbert (1,6,13,12,4)
inline MonomialIdeal k2211_ideal() {
  return to_ideal(complete_multipartite({2, 2, 1, 1}));
}

// all quadratic monomials except x0x2, x0x3, x1x2, x1x3: Hilbert (1,6,4)
inline Graph k22_plus_two_points() {
  return Graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

// Coefficientwise polynomial product, the test-side oracle for tensor
// Hilbert functions and multipartite f-vectors.
inline std::vector<std::int64_t> poly_mult(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace wlp::test
