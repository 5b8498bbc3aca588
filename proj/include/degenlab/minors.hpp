#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "degenlab/caps.hpp"
#include "degenlab/graph.hpp"

namespace degenlab {

/// Parameters whose minor-monotone ceiling the oracle can compute. `clique`
/// is the clique number; its ceiling is the Hadwiger number.
enum class CeilingParam { delta, kappa, avg_degree, clique };

const char* to_string(CeilingParam p) noexcept;
std::optional<CeilingParam> parse_ceiling_param(std::string_view name);

/// The parameter evaluated on a single graph, as a rational.
Rational evaluate(const Graph& g, CeilingParam p);

/// `value` is attained by `witness`, which `ops` produce from the source graph.
struct CeilingWitness {
  Rational value;
  std::vector<MinorOp> ops;
  Graph witness;
};

/// Exact maximum of `p` over all minors of `g`, with a replayable witness.
/// Branch and bound over the full minor lattice (vertex deletion, edge
/// deletion, edge contraction), memoised on canonical forms in a process-wide
/// table shared by all threads. Throws size_limit when n > cap.
CeilingWitness ceiling(const Graph& g, CeilingParam p, int cap = kDefaultMinorCap);

/// Same search without reconstructing the witness.
Rational ceiling_value(const Graph& g, CeilingParam p, int cap = kDefaultMinorCap);

/// Drops every memoised ceiling value.
void clear_ceiling_memo();

/// Induced subgraph `vertices` (indices into the source graph) with its
/// vertex connectivity.
struct SubgraphWitness {
  VertexSet vertices;
  Graph graph;
  int connectivity;
};

/// An induced subgraph with kappa >= k, or nullopt if none exists. Vertices
/// of degree < k are peeled away first; when the remaining core has a
/// separator smaller than k the search recurses into each side of it.
std::optional<SubgraphWitness> mader_subgraph_search(const Graph& g, int k,
                                                     int cap = kDefaultSubgraphCap);

/// Max kappa(H) over induced subgraphs H (edge deletion never raises kappa).
int max_subgraph_connectivity(const Graph& g, int cap = kDefaultSubgraphCap);

int clique_number(const Graph& g);
int independence_number(const Graph& g);
int chromatic_number(const Graph& g);

struct ExactParams {
  int chi;
  int alpha;
  int eta;
};

/// chi and alpha need n <= caps.subgraph_cap, eta needs n <= caps.minor_cap.
ExactParams exact_parameters(const Graph& g, const OracleCaps& caps = {});

}  // namespace degenlab
