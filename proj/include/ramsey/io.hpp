#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ramsey/graph.hpp"

namespace ramsey {

// Canonical text formats (ASCII, LF-terminated, edges sorted with u < v):
//
//   coloring <V> <k>        graph <V>
//   e <u> <v> <c>           e <u> <v>
//   ...                     ...

std::string serialize_graph(const Graph& g);
std::string serialize_coloring(const EdgeColoring& coloring);

Graph parse_graph(std::string_view text);
EdgeColoring parse_coloring(std::string_view text);

/// Parses either format, dispatching on the header keyword.
std::variant<Graph, EdgeColoring> parse_any(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ramsey
