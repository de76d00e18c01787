#ifndef TREESQ_GRAPH_IO_HPP
#define TREESQ_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "treesq/graph.hpp"

namespace treesq {

// Edge-list text format: first line "n m", then m lines "u v" (1-indexed,
// ascending within a line). Blank lines and lines starting with '#' are
// ignored. Parse failures throw InvalidInputError with the line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// DOT export with stable vertex and edge ordering.
void write_dot(std::ostream& out, const Graph& g);

} // namespace treesq

#endif
