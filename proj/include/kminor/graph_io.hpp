#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

/// graph6 encoding (no ">>graph6<<" header).
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph from_graph6(std::string_view text);

/// Plain edge list: "n m" followed by m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { graph6, edge_list };

/// Reads every graph in a stream. graph6 streams hold one graph per non-empty
/// line; edge-list streams hold one or more concatenated edge-list blocks.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);
/// Guesses the format from the first non-blank line.
GraphFormat detect_format(std::string_view first_line);

}  // namespace kminor
