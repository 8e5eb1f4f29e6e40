#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lincomb/graph.hpp"

namespace lincomb {

/// graph6 without the ">>graph6<<" header.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing newline.
/// Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

/// Edge list: first line n, then one 0-based "u v" pair per line. Blank lines
/// and lines starting with '#' are ignored.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

/// Reads a graph file; format chosen by extension (.g6 / .graph6 vs anything
/// else as edge list).
Graph read_graph_file(const std::string& path);

}  // namespace lincomb
