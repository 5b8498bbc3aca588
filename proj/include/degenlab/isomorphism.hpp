#pragma once

#include <cstdint>
#include <vector>

#include "degenlab/graph.hpp"

namespace degenlab {

inline constexpr int kDefaultIsomorphismCap = 16;

/// `graph` is the relabelled representative; `labeling[v]` is the canonical
/// index of source vertex v.
struct CanonicalForm {
  Graph graph;
  std::vector<int> labeling;
};

/// Canonical relabelling by colour refinement plus individualisation, keeping
/// the lexicographically largest adjacency certificate. Twin vertices in a
/// target cell are branched on only once.
CanonicalForm canonical_form(const Graph& g);

/// Throws size_limit when either order exceeds `cap`.
bool is_isomorphic(const Graph& a, const Graph& b,
                   int cap = kDefaultIsomorphismCap);

inline constexpr int kGraphKeyMaxOrder = 16;

/// Injective 128-bit packing of a labelled graph of order <= 16: the upper
/// triangle in graph6 bit order, then the order in the top byte.
struct GraphKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool operator==(const GraphKey&) const = default;
  auto operator<=>(const GraphKey&) const = default;
};

struct GraphKeyHash {
  std::size_t operator()(const GraphKey& k) const noexcept {
    return static_cast<std::size_t>(k.lo * 0x9E3779B97F4A7C15ULL ^ (k.hi + (k.lo >> 29)));
  }
};

GraphKey graph_key(const Graph& g);

}  // namespace degenlab
