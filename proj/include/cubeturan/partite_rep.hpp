#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubeturan/graph.hpp"
#include "cubeturan/hypergraph.hpp"
#include "cubeturan/search.hpp"

namespace cubeturan {

/// A layer embedding of a guest into L_k of Q_n plus a k-part partition of [n]
/// under which the top images (k-sets) form a k-partite hypergraph.
struct Representation {
    int k = 0;
    int n = 0;
    /// embedding[v] has k elements (top vertex) or k-1 elements (bottom vertex).
    std::vector<VertexSubset> embedding;
    std::vector<VertexSubset> parts;

    bool is_top(Vertex v) const { return embedding.at(v).size() == k; }
    Hypergraph top_hypergraph() const;

    friend bool operator==(const Representation&, const Representation&) = default;
};

struct RepresentationCheck {
    bool ok = false;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Checks every Representation invariant plus injectivity; reports the first violation.
RepresentationCheck verify_representation(const Graph& g, const Representation& r);

/// The 2-partite representation of Θ(q) on [q+2] (vertex numbering of theta(q)):
/// main poles -> {1}, {2}; middle pole i -> {i+3}; leg midpoints -> {1 or 2, i+3};
/// parts {1,2} and {3..q+2}.
Representation theta_representation(int q);

/// Adds the new element n+1 to every image and as a new part: a (k+1, n+1) representation.
Representation pad_representation(const Representation& r);

/// Exhaustive search over embeddings of g into L_k of Q_n, both orientations,
/// testing k-partiteness of the top images as they are placed.
/// Throws NotBipartiteError for non-bipartite guests and DomainError for disconnected ones.
SearchOutcome<Representation> find_representation(const Graph& g, int k, int n, const SearchBudget& budget = {});

/// Top-vertex gluing: B's ground set is shifted past A's, A-images gain w = img(b),
/// B-images gain u = img(a). Result is 2k-partite on n_A + n_B elements, with
/// vertices numbered as glue_at_vertex numbers them.
Representation glue_top(const Representation& ra, Vertex a, const Representation& rb, Vertex b);

/// Bottom-vertex gluing: both ground sets are relabeled so img(a) = img(b) = [k-1]
/// and they overlap only there. Parts are merged pairwise, aligned on the shared elements.
Representation glue_bottom(const Representation& ra, Vertex a, const Representation& rb, Vertex b);

struct PoleDistanceReport {
    int q = 0;
    int n = 0;
    /// Hamming distance between main-pole images -> number of embeddings found.
    std::map<int, std::uint64_t> distances;
    /// Layer k -> number of embeddings found there.
    std::map<int, std::uint64_t> embeddings_per_layer;
    /// First embedding whose main poles are not at distance 2 (scan order).
    std::optional<std::vector<VertexSubset>> counterexample;
    SearchStatus status = SearchStatus::exhausted_none;
    std::uint64_t nodes_explored = 0;
    /// Layers whose search closed within budget.
    int layers_closed = 0;

    std::uint64_t total() const;
    bool all_distance_two() const { return distances.size() == 1 && distances.begin()->first == 2; }
};

/// Enumerates the layer embeddings of Θ(q) into every L_k of Q_n (one
/// representative per coordinate symmetry class reached by the search) and
/// tallies main-pole distances. Layers run on up to `threads` workers; each
/// layer gets the full budget so the report does not depend on scheduling.
PoleDistanceReport pole_distance_scan(int q, int n, const SearchBudget& budget = {}, int threads = 1);

struct BlockReport {
    std::vector<Edge> edges;
    /// Block vertices in the host's numbering.
    std::vector<Vertex> vertices;
    SearchStatus status = SearchStatus::exhausted_none;
    std::optional<int> k;
    std::optional<int> n;
    std::optional<Representation> representation;
    std::string obstruction;
    std::uint64_t nodes_explored = 0;
};

struct BlocksRepresentationReport {
    std::vector<BlockReport> blocks;
    std::vector<Vertex> cut_vertices;
    bool all_represented = false;
    std::string verdict;
};

/// Block decomposition followed by find_representation per block for
/// k = 1..k_max and n = k..n_max (first success wins).
BlocksRepresentationReport blocks_have_representations(const Graph& g, int k_max, int n_max,
                                                       const SearchBudget& budget = {}, int threads = 1);

/// Representation file format:
///
///     rep k=<k> n=<n>
///     v <guest-vertex> <subset-as-hex>
///     part <index> <subset-as-hex>
void write_representation(std::ostream& out, const Representation& r);
std::string representation_to_string(const Representation& r);
/// Throws ParseError with line and column.
Representation parse_representation(std::istream& in);
Representation parse_representation_string(const std::string& text);
Representation read_representation_file(const std::string& path);

}  // namespace cubeturan
