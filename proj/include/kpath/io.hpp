#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath::io {

// Edge-list text: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n. '#' starts a comment; blank lines are ignored.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// graph6: one graph per line, size prefix followed by the upper triangle of
// the adjacency matrix in column order, six bits per printable byte.
Graph decode_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);
/// Reads every graph of a graph6 stream; errors report 1-based line numbers.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace kpath::io
