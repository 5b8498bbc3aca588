#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "degenlab/error.hpp"
#include "degenlab/rational.hpp"

namespace degenlab {

inline constexpr int kMaxOrder = 64;

/// Bit i set means vertex i is a member.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

inline constexpr VertexSet first_n(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) noexcept { return std::popcount(s); }

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, 1 <= n <= 64, stored as one
/// adjacency word per vertex.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return popcount(rows_[v]); }
  VertexSet vertices() const noexcept { return first_n(n_); }

  /// No-op when the edge is already present; throws on loops or bad indices.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const noexcept;

 private:
  int n_;
  int m_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

struct MinorOp {
  enum class Kind { delete_vertex, delete_edge, contract_edge };

  Kind kind;
  int u;
  int v = -1;  // unused for delete_vertex

  static MinorOp delete_vertex(int v) { return {Kind::delete_vertex, v, -1}; }
  static MinorOp delete_edge(int u, int v) { return {Kind::delete_edge, u, v}; }
  static MinorOp contract_edge(int u, int v) {
    return {Kind::contract_edge, u, v};
  }

  bool operator==(const MinorOp&) const = default;
};

const char* to_string(MinorOp::Kind kind) noexcept;

struct DegreeStats {
  int min_degree;
  int max_degree;
  Rational avg_degree;  // 2m/n
  int size;
};

/// Length of a shortest cycle; forests have infinite girth, which orders
/// above every finite value.
class Girth {
 public:
  static Girth infinite() noexcept { return Girth{}; }
  static Girth finite(int length) noexcept { return Girth{length}; }

  bool is_infinite() const noexcept { return !length_; }
  int length() const { return length_.value(); }

  std::strong_ordering operator<=>(const Girth& other) const noexcept;
  bool operator==(const Girth& other) const noexcept = default;

 private:
  Girth() = default;
  explicit Girth(int length) : length_(length) {}
  std::optional<int> length_;
};

Graph complement(const Graph& g);

/// Contraction keeps the smaller endpoint's index; every op compacts indices.
Graph apply_minor_op(const Graph& g, const MinorOp& op);
Graph apply_minor_ops(const Graph& g, std::span<const MinorOp> ops);

/// Subgraph induced by `keep`, relabelled in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

DegreeStats degree_stats(const Graph& g);
int min_degree(const Graph& g);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);

/// Maximum number of internally vertex-disjoint s-t paths (an s-t edge counts
/// as one path). Stops early once `limit` paths are found.
int local_connectivity(const Graph& g, int s, int t, int limit = kMaxOrder);

/// Exact kappa(G). Complete graphs give n-1, disconnected graphs and K1 give 0.
int vertex_connectivity(const Graph& g);

/// A minimum vertex separator, or nullopt for complete graphs (which have
/// none).
std::optional<VertexSet> minimum_vertex_cut(const Graph& g);

Girth girth(const Graph& g);

}  // namespace degenlab
