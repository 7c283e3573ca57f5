#pragma once

#include <vector>

#include "cubeturan/search.hpp"
#include "cubeturan/subset.hpp"

namespace cubeturan {

/// k-uniform hypergraph on [n] with hyperedges stored as subsets.
struct Hypergraph {
    int n = 0;
    int k = 0;
    /// Sorted, duplicate-free, each of cardinality k.
    std::vector<VertexSubset> edges;

    Hypergraph() = default;
    /// Sorts and deduplicates; throws DomainError on a hyperedge of the wrong size.
    Hypergraph(int n, int k, std::vector<VertexSubset> edges);

    /// Union of all hyperedges.
    VertexSubset support() const;
};

/// Looks for k parts such that every hyperedge meets each part exactly once.
/// The witness lists k pairwise disjoint parts covering the support (some may
/// be empty). Each connected piece of the co-occurrence graph is coloured
/// separately, with parts introduced in index order.
SearchOutcome<std::vector<VertexSubset>> is_k_partite(const Hypergraph& h, int k, const SearchBudget& budget = {});

/// True when `parts` certifies that h is k-partite.
bool is_partition_certificate(const Hypergraph& h, const std::vector<VertexSubset>& parts);

}  // namespace cubeturan
