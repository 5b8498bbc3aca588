#include "degenlab/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace degenlab {

namespace {

using Coloring = std::vector<int>;

void compact(Coloring& c) {
  Coloring sorted = c;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int& x : c)
    x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                         sorted.begin());
}

int color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Colour refinement to the coarsest equitable partition finer than `c`. New
// colours are ordered by (old colour, neighbour counts per colour), so the
// result is equivariant under relabelling.
void refine(const Graph& g, Coloring& c) {
  const int n = g.order();
  compact(c);
  int k = color_count(c);
  for (;;) {
    std::vector<std::vector<int>> sig(n, std::vector<int>(k + 1, 0));
    for (int v = 0; v < n; ++v) {
      sig[v][0] = c[v];
      for (VertexSet row = g.neighbors(v); row; row &= row - 1)
        ++sig[v][1 + c[std::countr_zero(row)]];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    Coloring next(n);
    int colour = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++colour;
      next[order[i]] = colour;
    }
    const int next_k = colour + 1;
    c = std::move(next);
    if (next_k == k) return;
    k = next_k;
  }
}

bool twins(const Graph& g, int u, int v) {
  return (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u));
}

struct Leaf {
  std::vector<VertexSet> certificate;
  Coloring labeling;
};

std::vector<VertexSet> certificate_of(const Graph& g, const Coloring& c) {
  const int n = g.order();
  std::vector<VertexSet> cert(n, 0);
  for (int v = 0; v < n; ++v)
    for (VertexSet row = g.neighbors(v); row; row &= row - 1)
      cert[c[v]] |= bit(c[std::countr_zero(row)]);
  return cert;
}

void search(const Graph& g, Coloring c, std::optional<Leaf>& best) {
  refine(g, c);
  const int n = g.order();
  const int k = color_count(c);
  if (k == n) {
    auto cert = certificate_of(g, c);
    if (!best || cert > best->certificate) best = Leaf{std::move(cert), c};
    return;
  }
  std::vector<int> size(k, 0);
  for (int x : c) ++size[x];
  const int target =
      static_cast<int>(std::find_if(size.begin(), size.end(),
                                    [](int s) { return s > 1; }) -
                       size.begin());
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    if (c[v] != target) continue;
    const bool redundant = std::any_of(reps.begin(), reps.end(),
                                       [&](int u) { return twins(g, u, v); });
    if (!redundant) reps.push_back(v);
  }
  for (int rep : reps) {
    Coloring child(n);
    for (int v = 0; v < n; ++v) child[v] = 2 * c[v] + (v == rep ? 0 : 1);
    search(g, std::move(child), best);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  std::optional<Leaf> best;
  search(g, Coloring(g.order(), 0), best);
  Graph h(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (VertexSet row = best->certificate[v]; row; row &= row - 1) {
      const int w = std::countr_zero(row);
      if (w > v) h.add_edge(v, w);
    }
  return {h, std::move(best->labeling)};
}

bool is_isomorphic(const Graph& a, const Graph& b, int cap) {
  if (a.order() > cap || b.order() > cap) {
    throw Error(ErrorKind::size_limit,
                "isomorphism test limited to order " + std::to_string(cap));
  }
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da(a.order());
  std::vector<int> db(b.order());
  for (int v = 0; v < a.order(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

GraphKey graph_key(const Graph& g) {
  const int n = g.order();
  if (n > kGraphKeyMaxOrder) {
    throw Error(ErrorKind::size_limit,
                "graph key limited to order " + std::to_string(kGraphKeyMaxOrder));
  }
  GraphKey key;
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if (!g.adjacent(i, j)) continue;
      if (pos < 64) {
        key.lo |= std::uint64_t{1} << pos;
      } else {
        key.hi |= std::uint64_t{1} << (pos - 64);
      }
    }
  }
  key.hi |= static_cast<std::uint64_t>(n) << 56;
  return key;
}

}  // namespace degenlab
