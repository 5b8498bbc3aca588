#pragma once

#include <string>
#include <string_view>

#include "degenlab/graph.hpp"

namespace degenlab {

/// Decodes one graph6 record (an optional trailing newline is ignored).
/// Throws MalformedInput with the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// "n m" on the first line, then one 1-indexed "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Undirected DOT with 1-indexed node names.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// True when the first line looks like a graph6 record: first byte >= 63
/// and the length matches the one implied by the header.
bool looks_like_graph6(std::string_view text);

/// graph6 or edge-list, auto-detected.
Graph parse_graph(std::string_view text);

}  // namespace degenlab
