#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "degenlab/graph.hpp"
#include "degenlab/io.hpp"

namespace fixtures {

using degenlab::Graph;

// 1-indexed edge list.
inline Graph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

// The 14-vertex drawing: K5 on 1..5, then each later vertex with its
// earlier neighbours.
inline Graph figure2_left() {
  Graph g(14);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  const std::vector<std::pair<int, std::vector<int>>> later{
      {6, {1, 2, 3, 4}}, {7, {1, 2, 3, 5}},  {8, {1, 4, 5, 6}},  {9, {2, 3, 4, 5}},
      {10, {1, 2, 6, 7}}, {11, {3, 4, 5, 6}}, {12, {1, 2, 7, 8}}, {13, {3, 4, 5, 6}},
      {14, {1, 7, 8, 9}}};
  for (const auto& [v, nbrs] : later)
    for (int u : nbrs) g.add_edge(v - 1, u - 1);
  return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

inline Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace fixtures
