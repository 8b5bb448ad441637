#pragma once

#include <iosfwd>
#include <string>

#include "pathsep/graph.hpp"

namespace pathsep {

// Text format (UTF-8):
//   first non-comment line:  n m
//   then m lines:            u v length
//   optional section:        a line "weights", then n lines "v w"
// '#' starts a comment (whole line or trailing); vertices are 0-indexed.

/// Parses the format above; throws ParseError (with line number) on
/// malformed input, duplicate edges, or negative lengths/weights.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);

/// Canonical serialization: edges sorted by (u,v); the weights section is
/// emitted only when some weight differs from 1.
void write_graph(const Graph& g, std::ostream& out);
std::string write_graph_string(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace pathsep
