#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "cubeturan/subset.hpp"

namespace cubeturan {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Default cap on materialized hypercubes: 2^20 vertices, about 10^7 edges.
inline constexpr int kDefaultHypercubeCap = 20;

/// Finite simple undirected graph, immutable after construction.
///
/// Edges are kept sorted and duplicate-free, and each vertex has a sorted
/// neighbour list. A graph that lives inside some Q_n additionally carries
/// one VertexSubset label per vertex; labels are validated on construction.
class Graph {
public:
    Graph() = default;

    /// Throws DomainError on out-of-range endpoints, self-loops or duplicate edges.
    Graph(int vertex_count, std::vector<Edge> edges);

    /// Labeled constructor. Every edge must join labels that differ in exactly
    /// one element, and labels must be pairwise distinct subsets of [ground_set_size].
    Graph(std::vector<VertexSubset> labels, std::vector<Edge> edges, int ground_set_size);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex a, Vertex b) const;
    /// Position of the edge in edges(), if present.
    std::optional<int> edge_index(Vertex a, Vertex b) const;

    bool has_labels() const { return labels_.has_value(); }
    const std::vector<VertexSubset>& labels() const;
    const VertexSubset& label(Vertex v) const { return labels().at(v); }
    std::optional<int> ground_set_size() const { return ground_set_size_; }

    /// Subgraph on the given vertices (renumbered in the given order), keeping labels.
    Graph induced(std::span<const Vertex> vertices) const;
    /// Subgraph with all vertices and the given edges only.
    Graph edge_subgraph(std::span<const Edge> edges) const;

    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    void build_adjacency();

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_{0};
    std::vector<Vertex> adjacency_;
    std::optional<std::vector<VertexSubset>> labels_;
    std::optional<int> ground_set_size_;
};

/// Q_n with vertex index equal to the subset's bit value.
/// Throws ResourceLimitError when n > cap (cap itself is clamped to kMaxGroundSet).
Graph build_hypercube(int n, int cap = kDefaultHypercubeCap);

/// Edge layer L_j of Q_n: vertices V_{j-1} then V_j in ascending bit order.
Graph layer_subgraph(int n, int j);

Graph cycle_graph(int length);
Graph path_graph(int edge_count);
Graph complete_graph(int vertex_count);

struct BlockDecomposition {
    /// Each block's edges sorted; blocks ordered by their smallest edge.
    std::vector<std::vector<Edge>> blocks;
    std::vector<Vertex> cut_vertices;
};

/// Biconnected components (two-connected pieces and bridges).
BlockDecomposition blocks(const Graph& g);

/// Vertices spanned by a block, ascending.
std::vector<Vertex> block_vertices(const std::vector<Edge>& block);

struct Bipartition {
    /// side[v] in {0, 1}.
    std::vector<int> side;

    int side_size(int s) const;
};

/// Two-colouring with the smallest vertex of each component on side 0.
/// Throws NotBipartiteError carrying an odd cycle.
Bipartition bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

/// Breadth-first order from the root; parent[root] == -1. Only the root's component is visited.
struct BfsTree {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};
BfsTree bfs_tree(const Graph& g, Vertex root = 0);

}  // namespace cubeturan
