#include "degenlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace degenlab {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorKind::invalid_operand,
                "vertex " + std::to_string(v) + " out of range for order " +
                    std::to_string(g.order()));
  }
}

void check_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v || !g.adjacent(u, v)) {
    throw Error(ErrorKind::invalid_operand,
                "no edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "}");
  }
}

// Drops bit `b` from a row and shifts the higher bits down by one.
VertexSet drop_bit(VertexSet row, int b) {
  const VertexSet low = row & (bit(b) - 1);
  const VertexSet high = b + 1 >= 64 ? 0 : (row >> (b + 1)) << b;
  return low | high;
}

Graph remove_vertex(const Graph& g, int b) {
  Graph h(g.order() - 1);
  for (int u = 0; u < g.order(); ++u) {
    if (u == b) continue;
    const int nu = u < b ? u : u - 1;
    VertexSet row = drop_bit(g.neighbors(u) & ~bit(b), b);
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      if (w > nu) h.add_edge(nu, w);
    }
  }
  return h;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::size_limit,
                "graph order must be in [1, 64], got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error(ErrorKind::invalid_operand, "loops are not allowed");
  if (adjacent(u, v)) return;
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_edge(*this, u, v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
  --m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    VertexSet row = rows_[u] & ~first_n(u + 1);
    while (row) {
      out.emplace_back(u, std::countr_zero(row));
      row &= row - 1;
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const noexcept {
  return n_ == other.n_ && m_ == other.m_ &&
         std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

const char* to_string(MinorOp::Kind kind) noexcept {
  switch (kind) {
    case MinorOp::Kind::delete_vertex: return "delete-vertex";
    case MinorOp::Kind::delete_edge: return "delete-edge";
    case MinorOp::Kind::contract_edge: return "contract-edge";
  }
  return "?";
}

std::strong_ordering Girth::operator<=>(const Girth& other) const noexcept {
  if (is_infinite() || other.is_infinite()) {
    return static_cast<int>(is_infinite()) <=> static_cast<int>(other.is_infinite());
  }
  return *length_ <=> *other.length_;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph apply_minor_op(const Graph& g, const MinorOp& op) {
  switch (op.kind) {
    case MinorOp::Kind::delete_vertex: {
      check_vertex(g, op.u);
      if (g.order() < 2) {
        throw Error(ErrorKind::invalid_operand,
                    "cannot delete the only vertex");
      }
      return remove_vertex(g, op.u);
    }
    case MinorOp::Kind::delete_edge: {
      check_edge(g, op.u, op.v);
      Graph h = g;
      h.remove_edge(op.u, op.v);
      return h;
    }
    case MinorOp::Kind::contract_edge: {
      check_edge(g, op.u, op.v);
      const int keep = std::min(op.u, op.v);
      const int gone = std::max(op.u, op.v);
      Graph h = g;
      VertexSet merged = g.neighbors(gone) & ~bit(keep);
      while (merged) {
        const int w = std::countr_zero(merged);
        merged &= merged - 1;
        h.add_edge(keep, w);
      }
      return remove_vertex(h, gone);
    }
  }
  throw Error(ErrorKind::invalid_operand, "unknown minor operation");
}

Graph apply_minor_ops(const Graph& g, std::span<const MinorOp> ops) {
  Graph h = g;
  for (const auto& op : ops) h = apply_minor_op(h, op);
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  if (keep == 0) {
    throw Error(ErrorKind::invalid_operand, "induced subgraph must be nonempty");
  }
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for (VertexSet s = keep; s; s &= s - 1) index[std::countr_zero(s)] = k++;
  Graph h(k);
  for (VertexSet s = keep; s; s &= s - 1) {
    const int u = std::countr_zero(s);
    VertexSet row = g.neighbors(u) & keep & ~first_n(u + 1);
    while (row) {
      const int w = std::countr_zero(row);
      row &= row - 1;
      h.add_edge(index[u], index[w]);
    }
  }
  return h;
}

DegreeStats degree_stats(const Graph& g) {
  int lo = g.order();
  int hi = 0;
  for (int v = 0; v < g.order(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  return {lo, hi, Rational(2 * g.size(), g.order()), g.size()};
}

int min_degree(const Graph& g) {
  int lo = g.order();
  for (int v = 0; v < g.order(); ++v) lo = std::min(lo, g.degree(v));
  return lo;
}

bool is_connected(const Graph& g, VertexSet within) {
  within &= g.vertices();
  if (within == 0) return true;
  VertexSet seen = within & (~within + 1);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1)
      next |= g.neighbors(std::countr_zero(s));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

namespace {

// Unit vertex-capacity flow on the split graph: node 2v is v_in, 2v+1 is
// v_out, and v_in -> v_out has capacity one except at the terminals.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t)
      : n_(g.order()), nodes_(2 * n_), cap_(nodes_ * nodes_, 0), s_(s), t_(t) {
    for (int v = 0; v < n_; ++v)
      cap_[idx(in(v), out(v))] = (v == s || v == t) ? n_ : 1;
    for (const auto& [u, v] : g.edges()) {
      if ((u == s && v == t) || (u == t && v == s)) continue;
      cap_[idx(out(u), in(v))] = n_;
      cap_[idx(out(v), in(u))] = n_;
    }
  }

  int run(int limit) {
    int flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  // Vertices whose split arc crosses the residual cut after `run`.
  VertexSet cut() const {
    const auto reach = reachable();
    VertexSet out_set = 0;
    for (int v = 0; v < n_; ++v)
      if (reach[in(v)] && !reach[out(v)]) out_set |= bit(v);
    return out_set;
  }

 private:
  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * nodes_ + b;
  }

  std::vector<char> reachable() const {
    std::vector<char> seen(nodes_, 0);
    std::vector<int> stack{out(s_)};
    seen[out(s_)] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < nodes_; ++b) {
        if (!seen[b] && cap_[idx(a, b)] > 0) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return seen;
  }

  bool augment() {
    std::vector<int> parent(nodes_, -1);
    std::queue<int> q;
    const int src = out(s_);
    const int dst = in(t_);
    parent[src] = src;
    q.push(src);
    while (!q.empty() && parent[dst] < 0) {
      const int a = q.front();
      q.pop();
      for (int b = 0; b < nodes_; ++b) {
        if (parent[b] < 0 && cap_[idx(a, b)] > 0) {
          parent[b] = a;
          q.push(b);
        }
      }
    }
    if (parent[dst] < 0) return false;
    for (int b = dst; b != src; b = parent[b]) {
      const int a = parent[b];
      --cap_[idx(a, b)];
      ++cap_[idx(b, a)];
    }
    return true;
  }

  int n_;
  int nodes_;
  std::vector<int> cap_;
  int s_;
  int t_;
};

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

}  // namespace

int local_connectivity(const Graph& g, int s, int t, int limit) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw Error(ErrorKind::invalid_operand, "s and t must differ");
  const int direct = g.adjacent(s, t) ? 1 : 0;
  if (limit <= direct) return direct;
  SplitFlow flow(g, s, t);
  return direct + flow.run(limit - direct);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  // Some vertex among the first kappa+1 lies outside a minimum separator.
  int best = min_degree(g);
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, local_connectivity(g, i, j, best));
    }
  }
  return best;
}

std::optional<VertexSet> minimum_vertex_cut(const Graph& g) {
  const int n = g.order();
  if (is_complete(g)) return std::nullopt;
  if (!is_connected(g)) return VertexSet{0};
  int best = n;
  VertexSet best_cut = 0;
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      SplitFlow flow(g, i, j);
      const int f = flow.run(best);
      if (f < best) {
        best = f;
        best_cut = flow.cut();
      }
    }
  }
  return best_cut;
}

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (best && 2 * dist[u] + 1 >= best) break;
      for (VertexSet row = g.neighbors(u); row; row &= row - 1) {
        const int w = std::countr_zero(row);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best ? Girth::finite(best) : Girth::infinite();
}

}  // namespace degenlab
