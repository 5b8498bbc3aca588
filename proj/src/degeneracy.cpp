#include "degenlab/degeneracy.hpp"

#include <algorithm>
#include <string>

namespace degenlab {

DegeneracyCertificate degeneracy(const Graph& g) {
  const int n = g.order();
  VertexSet alive = g.vertices();
  std::vector<int> peeled;
  std::vector<int> removal_degree;
  peeled.reserve(n);
  removal_degree.reserve(n);
  int value = 0;
  while (alive) {
    int pick = -1;
    int pick_degree = n;
    for (VertexSet s = alive; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      const int d = popcount(g.neighbors(v) & alive);
      if (d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    value = std::max(value, pick_degree);
    peeled.push_back(pick);
    removal_degree.push_back(pick_degree);
    alive &= ~bit(pick);
  }
  std::reverse(peeled.begin(), peeled.end());
  std::reverse(removal_degree.begin(), removal_degree.end());
  return {value, std::move(peeled), std::move(removal_degree)};
}

std::vector<int> back_degrees(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw Error(ErrorKind::not_a_permutation,
                "sequence length " + std::to_string(order.size()) +
                    " differs from order " + std::to_string(g.order()));
  }
  VertexSet placed = 0;
  std::vector<int> out;
  out.reserve(order.size());
  for (int v : order) {
    if (v < 0 || v >= g.order() || (placed & bit(v))) {
      throw Error(ErrorKind::not_a_permutation,
                  "vertex " + std::to_string(v) + " repeated or out of range");
    }
    out.push_back(popcount(g.neighbors(v) & placed));
    placed |= bit(v);
  }
  return out;
}

int building_sequence_degree(const Graph& g, std::span<const int> order) {
  const auto d = back_degrees(g, order);
  return *std::max_element(d.begin(), d.end());
}

long long lick_white_bound(int n, int k) {
  if (k < 0 || k >= n) {
    throw Error(ErrorKind::domain_error,
                "lick_white_bound needs 0 <= k < n, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  return static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2;
}

}  // namespace degenlab
