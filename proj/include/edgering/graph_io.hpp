#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

/// Reads "d n" followed by n lines "i j" (1-based, whitespace separated,
/// LF or CRLF). Trailing blank lines are accepted. Throws ParseError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list; edges are written in stored order.
std::string serialize_edge_list(const Graph& g);

/// Decodes one graph6 line (no newline, optional ">>graph6<<" header).
Graph parse_graph6_line(std::string_view line, std::size_t line_no = 1);
/// One graph per non-empty line. Throws ParseError.
std::vector<Graph> parse_graph6(std::istream& in);
std::vector<Graph> parse_graph6(std::string_view text);

/// graph6 encoding without trailing newline.
std::string serialize_graph6(const Graph& g);

}  // namespace edgering
