#pragma once

#include <string>
#include <vector>

#include "cubeturan/graph.hpp"
#include "cubeturan/graph_io.hpp"

namespace cubeturan {

namespace roles {
inline constexpr const char* kMainPoles = "main_poles";
inline constexpr const char* kPoles = "poles";
inline constexpr const char* kSubdivisionVertices = "subdivision_vertices";
inline constexpr const char* kSharedVertex = "shared_vertex";
}  // namespace roles

/// A graph plus named lists of distinguished vertices.
struct MarkedGraph {
    Graph graph;
    Marks marks;

    /// Empty list when the role is absent.
    const std::vector<Vertex>& marked(const std::string& role) const;
};

/// 1-subdivision G(1). Original vertices keep their numbers; the subdivision
/// vertex of the i-th edge (in sorted order) is |V(G)| + i.
MarkedGraph subdivide(const Graph& g);

/// K_{s,t}; the s-side is vertices 0..s-1, the t-side s..s+t-1.
Graph complete_bipartite(int s, int t);

/// Theta graph K_{q,2}(1): q legs of length 4 between the main poles q and q+1.
MarkedGraph theta(int q);

/// Two copies of Θ(q) sharing one vertex: a main pole of the second copy is
/// identified with the first subdivision vertex adjacent to the first copy's
/// first main pole.
MarkedGraph h_graph(int q);

/// Disjoint union with b identified to a. A's vertices keep their numbers,
/// B's remaining vertices follow in order. Marks of both inputs are merged
/// per role and shared_vertex is set to a.
MarkedGraph glue_at_vertex(const MarkedGraph& a_graph, Vertex a, const MarkedGraph& b_graph, Vertex b);

/// Where glue_at_vertex sends each vertex of the second graph.
std::vector<Vertex> glued_vertex_map(int a_vertex_count, Vertex a, int b_vertex_count, Vertex b);

/// q copies of B pairwise sharing only the copy of b.
MarkedGraph star_of_copies(const MarkedGraph& b_graph, Vertex b, int q);

}  // namespace cubeturan
