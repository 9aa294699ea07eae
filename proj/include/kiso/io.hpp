#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "kiso/graph.hpp"

namespace kiso {

// Edge-list text: first non-comment token is n, then whitespace-separated
// "u v" pairs (0-based). Everything from '#' to end of line is ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6 (printable ASCII, orders up to 258047). Leading ">>graph6<<"
// header and surrounding whitespace are accepted.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Comma-separated vertex list ("0,3,7"; empty string -> empty set).
VertexSet parse_vertex_list(std::string_view text);
std::string format_vertex_list(std::span<const Vertex> set);

} // namespace kiso
