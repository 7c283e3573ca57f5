#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubeturan/graph.hpp"
#include "cubeturan/search.hpp"

namespace cubeturan {

/// Injective map from guest vertices into Q_n realizing every guest edge as a hypercube edge.
struct Embedding {
    int n = 0;
    std::vector<VertexSubset> image;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Checks injectivity, ground-set containment and edge preservation.
/// Returns an empty string when valid, otherwise the first violation.
std::string embedding_violation(const Graph& g, const Embedding& e);
bool is_valid_embedding(const Graph& g, const Embedding& e);

/// Edge colouring indexed like g.edges(); colours are 0-based.
struct NiceColoring {
    std::vector<int> color;
    int color_count = 0;

    friend bool operator==(const NiceColoring&, const NiceColoring&) = default;
};

struct ColoringCheck {
    bool nice = false;
    std::string message;
    /// Fundamental cycle whose colour vector is nonzero (cycle condition).
    std::vector<Vertex> violating_cycle;
    /// Two distinct vertices with the same potential (path condition).
    std::optional<Edge> violating_pair;

    explicit operator bool() const { return nice; }
};

/// Potential test: φ(root)=∅ and φ(child)=φ(parent) xor {colour}; nice iff every
/// non-tree edge agrees with φ and φ is injective.
/// Throws DomainError for a disconnected graph or a colouring of the wrong shape.
ColoringCheck verify_nice_coloring(const Graph& g, const NiceColoring& c);

/// Searches vertex potentials in BFS order with colours introduced in index order.
/// exhausted_none proves g has no embedding in Q_{c_max}.
SearchOutcome<NiceColoring> find_nice_coloring(const Graph& g, int c_max, const SearchBudget& budget = {});

/// v -> φ(v) into Q_{color_count}; the root (vertex 0) maps to ∅.
Embedding coloring_to_embedding(const Graph& g, const NiceColoring& c);

/// Colours each edge by the element in which its endpoint images differ.
NiceColoring embedding_to_coloring(const Graph& g, const Embedding& e);

/// Direct backtracking into Q_n. Vertex 0 maps to ∅ and its neighbours to
/// unit vectors in index order; nothing else is symmetry-reduced.
SearchOutcome<Embedding> embed_in_hypercube(const Graph& g, int n, const SearchBudget& budget = {});

}  // namespace cubeturan
