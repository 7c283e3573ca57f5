#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubeturan/graph.hpp"
#include "cubeturan/hypergraph.hpp"
#include "cubeturan/search.hpp"

namespace cubeturan {

enum class ExtremalStatus { exact, lower_bound, inconclusive };

std::string_view to_string(ExtremalStatus status);

/// ex(Q_n, H) or a bound on it, with an H-free witness.
struct ExtremalResult {
    int n = 0;
    std::string guest_id;
    int value = 0;
    /// Edges of Q_n (vertex index = subset bits) forming an H-free subgraph; size == value.
    std::vector<Edge> witness_edges;
    ExtremalStatus status = ExtremalStatus::inconclusive;
    std::uint64_t nodes_explored = 0;
    /// Number of copies of the guest in the host.
    std::size_t copy_count = 0;
};

/// Maximum copy-free edge subset of Q_n by branch and bound over edges in
/// canonical order (keep before delete). The bound subtracts a greedy packing
/// of copies that are disjoint on undecided edges. Among optimal witnesses the
/// lexicographically least edge-index set is returned.
ExtremalResult extremal_number(int n, const Graph& guest, const SearchBudget& budget = {},
                               const std::string& guest_id = "guest");

struct DensityPoint {
    int n = 0;
    int value = 0;
    /// ||Q_n|| = n 2^{n-1}.
    std::int64_t host_edges = 0;
    double ratio = 0.0;
    ExtremalStatus status = ExtremalStatus::inconclusive;
};

struct DensitySequence {
    std::vector<DensityPoint> points;
    /// n values where both this and the previous point are exact and the ratio went up.
    std::vector<int> increases;

    bool non_increasing() const { return increases.empty(); }
};

DensitySequence density_sequence(const Graph& guest, int n_from, int n_to, const SearchBudget& budget = {});

/// Number of y in V_j (j = |x| + k) with x ⊂ y such that all k sets y∖{e},
/// e ∈ y∖x, are neighbours of y in g. g must be a labeled subgraph of L_j.
std::int64_t up_set_full_vertices(const Graph& g, const VertexSubset& x, int k);

struct StarCountReport {
    int j = 0;
    int k = 0;
    /// Σ_y C(d(y), k) over y ∈ V_j.
    std::int64_t t = 0;
    /// u_x for every x ∈ V_{j-k}, including zeros.
    std::map<VertexSubset, std::int64_t> per_x_full_counts;

    std::int64_t full_total() const;
    bool identity_holds() const { return full_total() == t; }
};

/// t by the degree formula and Σ_x u_x by up-set scans; in a layer graph the two agree exactly.
StarCountReport star_count_identity(const Graph& g, int j, int k);

/// Random labeled subgraph of L_j in Q_n keeping each edge with probability p.
/// Uses raw mt19937_64 output so the result is identical on every platform.
Graph random_layer_subgraph(int n, int j, double p, std::uint64_t seed);

struct MiddleMass {
    boost::multiprecision::cpp_int numerator;
    boost::multiprecision::cpp_int denominator;

    double value() const;
    /// "numerator/denominator" in lowest terms.
    std::string to_string() const;
};

/// Σ C(n,i) over |i - n/2| > n^{2/3}, divided by 2^n, as an exact reduced fraction.
MiddleMass middle_mass(int n);

/// True when a < b, compared exactly.
bool operator<(const MiddleMass& a, const MiddleMass& b);
bool operator==(const MiddleMass& a, const MiddleMass& b);

struct HypergraphExtremalResult {
    int n = 0;
    int k = 0;
    int value = 0;
    std::vector<VertexSubset> witness_edges;
    ExtremalStatus status = ExtremalStatus::inconclusive;
    std::uint64_t nodes_explored = 0;
    std::size_t copy_count = 0;
};

/// ex_k(n, F): largest k-uniform hypergraph on [n] with no copy of F.
HypergraphExtremalResult hypergraph_extremal(int n, int k, const Hypergraph& forbidden, const SearchBudget& budget = {});

/// Distinct copies of `pattern` among the given host hyperedges, each as sorted host-edge indices.
/// Isolated elements of the pattern's ground set are ignored.
std::vector<std::vector<int>> hypergraph_copies(const std::vector<VertexSubset>& host_edges, int n,
                                                const Hypergraph& pattern, BudgetTracker& tracker);

}  // namespace cubeturan
