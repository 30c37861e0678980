#ifndef PRIMEX_GRAPH_IO_HPP
#define PRIMEX_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "graph.hpp"

namespace primex {

// graph6 with the single-byte header (orders 0..62). The byte layout is:
// header byte n+63, then the upper-triangle bits in the pair order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
// group +63, zero-padded at the end. Trailing whitespace is tolerated;
// anything else after the body is an error.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list format: first non-blank line "n <order>", then one "u v" line
// per edge with 0 <= u != v < order; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

// Autodetect: a first line starting with "n " or "n\t" is an edge list,
// anything else is graph6.
Graph parse_graph_auto(std::string_view text);

}  // namespace primex

#endif
