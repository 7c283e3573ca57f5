#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cubeturan/graph.hpp"

namespace cubeturan {

/// Version of the text formats below, printed by `cubeturan --version`.
inline constexpr const char* kFormatVersion = "1";

/// Role name -> marked vertices, as carried by MarkedGraph.
using Marks = std::map<std::string, std::vector<Vertex>>;

/// A graph read from the edge-list format together with any mark lines.
struct ParsedGraph {
    Graph graph;
    Marks marks;
};

/// Edge-list format:
///
///     # comment
///     p <vertex_count>
///     g <ground_set_size>          (optional, labeled graphs only)
///     <u> <v>
///     l <vertex> <subset-as-hex>
///     m <role> <vertex>...
///
/// Vertices are 0-indexed. Throws ParseError with line and column.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_string(const std::string& text);
ParsedGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g, const Marks& marks = {});
std::string graph_to_string(const Graph& g, const Marks& marks = {});

}  // namespace cubeturan
