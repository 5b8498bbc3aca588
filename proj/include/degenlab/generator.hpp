#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degenlab/graph.hpp"

namespace degenlab {

/// State after processing vertex `i` (1-based, 2..n). `chosen` holds the
/// 0-based predecessors joined to vertex i; `L[j]` counts the predecessors of
/// later vertices that were not joined to j so far, i.e. j's degree in the
/// complement restricted to {j, ..., i}.
struct GenStep {
  int i;
  std::vector<int> chosen;
  std::vector<int> L;
  int t;                 // max L
  long long sigma;       // sum L
  int p;                 // #{j : L[j] = t - 1}, zero when t = 0
  int q;                 // #{j : L[j] = t}
  std::vector<int> psi;  // psi[r] = #{j : L[j] = r}, r = 0..t
};

struct GenTrace {
  int n;
  int h;
  std::vector<GenStep> steps;  // steps[k].i == k + 2
};

struct Generated {
  Graph graph;
  GenTrace trace;
};

/// Builds a graph of order n and degeneracy h whose pair (h, l(G^c)) is a
/// right-minimal covering pair. Vertex i joins all predecessors while
/// i <= h + 1, otherwise the h vertices with the largest L (smallest index on
/// ties). Requires 0 <= h < n <= 64.
Generated generate(int n, int h);

struct TraceViolation {
  int iteration;  // 1-based i, or 0 for whole-trace clauses
  std::string clause;
  std::string detail;
};

/// Replays every invariant of the generator's correctness argument against
/// a trace; returns the first violated clause, or nullopt when all hold.
std::optional<TraceViolation> check_trace(const GenTrace& trace, int n, int h);

/// A graph with l(G) + l(G^c) = r, built from the covering pair with sum r
/// and minimal k. Throws not_a_covering_sum.
Graph realize_sum(int n, int r);

}  // namespace degenlab
