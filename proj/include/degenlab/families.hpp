#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "degenlab/graph.hpp"

namespace degenlab {

struct FamilySpec {
  enum class Kind { path, cycle, complete, complete_bipartite, empty, matula, figure1 };

  Kind kind;
  std::vector<int> params;

  /// Parses "path:4", "complete-bipartite:2,3", "matula:2", "figure1".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Paths and cycles use consecutive vertices; complete-bipartite(a, b) puts
/// the a-side first.
Graph standard_family(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

/// Blocks K_s, co-K_s, co-K_s, K_s in path order (block-major vertex order),
/// consecutive blocks completely joined. Self-complementary, 4s vertices.
Graph matula(int s);

/// The 8-vertex graph whose ceil-delta and complement's ceil-delta are both 4.
/// Vertices a..h are 0..7 at a(5,0) b(5,20) c(10,5) d(10,15) e(20,5) f(20,15)
/// g(30,5) h(30,15) in the drawing it was reconstructed from.
Graph figure1();

/// Which reading of the drawing figure1() ships; see figure1_edges().
inline constexpr std::string_view kFigure1Interpretation =
    "reconstructed: d(10,15)-h(30,15) segment read as d-f + f-h through f; "
    "curve c->g read as the single edge c-g";

/// Edges read unambiguously from the drawing.
std::vector<Edge> figure1_certain_edges();

}  // namespace degenlab
