#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mkvis/graph.hpp"

namespace mkvis {

// Edge-list text format:
//
//   # optional comments; '#' starts a comment anywhere on a line
//   n m
//   u v        (m lines, 0-based ids)
//
// Throws ParseError carrying the 1-based line number.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Writes one "# ..." line per comment, then the header and edges (u < v,
// lexicographic). LF line endings.
std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments = {});

// {"n": 3, "edges": [[0,1],[1,2]]}
Graph parse_json_graph(std::string_view text);

}  // namespace mkvis
