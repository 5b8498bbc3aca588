#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library on small graphs. None of them shares code with the library beyond
// the Graph container itself.

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

#include "degenlab/graph.hpp"
#include "degenlab/rational.hpp"

namespace oracle {

using degenlab::Graph;
using degenlab::Rational;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Components of the graph restricted to `alive`, by DFS on the matrix.
inline int components(const std::vector<std::vector<bool>>& a, const std::vector<bool>& alive) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (alive[v] && a[u][v] && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
  }
  return count;
}

// Smallest vertex set whose removal disconnects; n - 1 when none exists.
inline int connectivity(const Graph& g) {
  const int n = g.order();
  const auto a = matrix(g);
  int best = n - 1;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best || n - size < 2) continue;
    std::vector<bool> alive(n);
    for (int v = 0; v < n; ++v) alive[v] = !(mask >> v & 1U);
    if (components(a, alive) > 1) best = size;
  }
  return best;
}

inline Graph induced(const Graph& g, unsigned mask) {
  std::vector<int> index(g.order(), -1);
  int k = 0;
  for (int v = 0; v < g.order(); ++v)
    if (mask >> v & 1U) index[v] = k++;
  Graph h(std::max(k, 1));
  for (const auto& [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) h.add_edge(index[u], index[v]);
  return h;
}

inline int lowest_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

// max over nonempty vertex subsets of the induced minimum degree.
inline int degeneracy(const Graph& g) {
  int best = 0;
  for (unsigned mask = 1; mask < (1U << g.order()); ++mask)
    best = std::max(best, lowest_degree(induced(g, mask)));
  return best;
}

// max over nonempty vertex subsets of the induced connectivity.
inline int max_subgraph_connectivity(const Graph& g) {
  int best = 0;
  for (unsigned mask = 1; mask < (1U << g.order()); ++mask)
    best = std::max(best, connectivity(induced(g, mask)));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges())
      if (!b.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Shortest cycle through each edge uv is 1 + dist(u, v) in G - uv; 0 for forests.
inline int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y = 0; y < n; ++y) {
        if (!g.adjacent(x, y) || dist[y] >= 0) continue;
        if ((x == u && y == v) || (x == v && y == u)) continue;
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
    if (dist[v] > 0 && (best == 0 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  return best;
}

inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      bool proper = true;
      for (const auto& [u, v] : g.edges())
        if (c[u] == c[v]) {
          proper = false;
          break;
        }
      if (proper) return k;
      int i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  for (unsigned mask = 1; mask < (1U << g.order()); ++mask) {
    bool independent = true;
    for (const auto& [u, v] : g.edges())
      if ((mask >> u & 1U) && (mask >> v & 1U)) independent = false;
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline int clique_number(const Graph& g) {
  int best = 1;
  for (unsigned mask = 1; mask < (1U << g.order()); ++mask) {
    const Graph h = induced(g, mask);
    if (h.size() == h.order() * (h.order() - 1) / 2) best = std::max(best, h.order());
  }
  return best;
}

// Visits the quotient of every family of disjoint connected branch sets.
// Deleting edges never raises the parameters checked here, so these
// quotients carry every minor-ceiling value.
inline void for_each_quotient(const Graph& g, const std::function<void(const Graph&)>& visit) {
  const int n = g.order();
  const auto a = matrix(g);
  std::vector<int> label(n, 0);  // 0 = deleted, 1..t = branch set
  std::function<void(int, int)> rec = [&](int v, int t) {
    if (v == n) {
      if (t == 0) return;
      for (int b = 1; b <= t; ++b) {
        std::vector<bool> alive(n);
        for (int x = 0; x < n; ++x) alive[x] = label[x] == b;
        if (components(a, alive) != 1) return;
      }
      Graph q(t);
      for (const auto& [x, y] : g.edges())
        if (label[x] && label[y] && label[x] != label[y]) q.add_edge(label[x] - 1, label[y] - 1);
      visit(q);
      return;
    }
    for (int b = 0; b <= t + 1; ++b) {
      label[v] = b;
      rec(v + 1, std::max(t, b));
    }
  };
  rec(0, 0);
}

inline int ceiling_min_degree(const Graph& g) {
  int best = 0;
  for_each_quotient(g, [&](const Graph& q) { best = std::max(best, lowest_degree(q)); });
  return best;
}

inline int ceiling_connectivity(const Graph& g) {
  int best = 0;
  for_each_quotient(g, [&](const Graph& q) { best = std::max(best, connectivity(q)); });
  return best;
}

inline Rational ceiling_avg_degree(const Graph& g) {
  Rational best = 0;
  for_each_quotient(g, [&](const Graph& q) {
    best = std::max(best, Rational(2 * q.size(), q.order()));
  });
  return best;
}

inline int hadwiger_number(const Graph& g) {
  int best = 1;
  for_each_quotient(g, [&](const Graph& q) {
    if (q.size() == q.order() * (q.order() - 1) / 2) best = std::max(best, q.order());
  });
  return best;
}

// Lick-White style bound, written independently.
inline long long lw(long long n, long long k) { return k * n - k * (k + 1) / 2; }

inline bool covering(long long h, long long k, long long n) {
  return h + k <= n - 1 && lw(n, h) + lw(n, k) >= n * (n - 1) / 2;
}

inline bool covering_sum(int r, int n) {
  for (int h = 0; h <= r; ++h)
    if (h < n && r - h < n && covering(h, r - h, n)) return true;
  return false;
}

}  // namespace oracle
