#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "bootperc/graph.hpp"

namespace bootperc {

// Text format:
//
//   n m
//   u v      (exactly m lines, 0 <= u, v < n, u != v)
//
// Tokens may be separated by any run of spaces or tabs. Blank lines and
// lines whose first non-blank character is '#' are skipped.

/// Parses the edge-list format. Repeated edges are collapsed, so the
/// resulting graph may have fewer than m edges. Throws ParseError.
Graph from_edge_list(std::string_view text);
Graph from_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Canonical form: header line then edges with the smaller endpoint first,
/// sorted, joined by '\n' with no trailing newline.
std::string to_edge_list(const Graph& g);

}  // namespace bootperc
