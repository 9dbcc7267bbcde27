#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bchrome/graph.hpp"

namespace bchrome {

// graph6 interchange format (McKay): printable 6-bit encoding of the vertex
// count followed by the upper-triangular adjacency bitmap in column-major
// order. One graph per line. Throws Graph6Error on malformed input.
Graph parse_graph6(std::string_view text);

// Canonical graph6 line for the given labeled graph; parse_graph6 round-trips
// it exactly. Requires 1 <= n <= 258047.
std::string emit_graph6(const Graph& g);

// All non-empty, non-comment lines of a file, parsed in order. Lines starting
// with '>' other than the ">>graph6<<" prefix are rejected.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace bchrome
