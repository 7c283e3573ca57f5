#pragma once

#include <cstdint>
#include <vector>

#include "cubeturan/graph.hpp"
#include "cubeturan/search.hpp"

namespace cubeturan {

/// One subgraph of the host isomorphic to the guest.
struct Copy {
    /// vertex_map[g] is the host vertex playing guest vertex g.
    std::vector<Vertex> vertex_map;
    /// Host edges used by the copy, sorted. This is the copy's identity.
    std::vector<Edge> host_edges;
};

struct CopyEnumeration {
    /// Distinct copies sorted by host edge set.
    std::vector<Copy> copies;
    /// found / exhausted_none when the search closed or hit the limit, inconclusive on budget exhaustion.
    SearchStatus status = SearchStatus::exhausted_none;
    /// True when the search stopped because `limit` copies were collected.
    bool truncated = false;
    std::uint64_t nodes_explored = 0;
};

/// Backtracking subgraph-isomorphism enumeration (not induced).
///
/// Two embeddings count as the same copy when they use the same host edges,
/// so guest automorphisms collapse. limit == 0 means unlimited. A guest with
/// no edges yields one empty copy when it fits in the host.
CopyEnumeration enumerate_copies(const Graph& host, const Graph& guest, std::size_t limit = 0,
                                 const SearchBudget& budget = {});

/// True when the host contains no copy of the guest. Throws DomainError if the search is inconclusive.
bool is_free_of(const Graph& host, const Graph& guest, const SearchBudget& budget = {});

/// Same vertex and edge counts plus a spanning copy.
bool are_isomorphic(const Graph& a, const Graph& b, const SearchBudget& budget = {});

}  // namespace cubeturan
