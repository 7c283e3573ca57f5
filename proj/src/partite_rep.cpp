#include "cubeturan/partite_rep.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cubeturan/constructions.hpp"
#include "cubeturan/errors.hpp"
#include "detail.hpp"

namespace cubeturan {

Hypergraph Representation::top_hypergraph() const {
    std::vector<VertexSubset> tops;
    for (const auto& img : embedding) {
        if (img.size() == k) tops.push_back(img);
    }
    return Hypergraph(n, k, std::move(tops));
}

RepresentationCheck verify_representation(const Graph& g, const Representation& r) {
    auto fail = [](std::string message) { return RepresentationCheck{false, std::move(message)}; };
    if (r.n < 0 || r.n > kMaxGroundSet) return fail("ground set size outside [0, 30]");
    if (r.k < 1 || r.k > r.n) return fail("k outside [1, n]");
    if (static_cast<int>(r.embedding.size()) != g.vertex_count()) return fail("embedding size differs from vertex count");
    const std::uint32_t universe = r.n >= 32 ? ~0U : ((1U << r.n) - 1U);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const VertexSubset& img = r.embedding[v];
        if ((img.bits() & ~universe) != 0) return fail("image of vertex " + std::to_string(v) + " escapes [n]");
        if (img.size() != r.k && img.size() != r.k - 1) {
            return fail("image of vertex " + std::to_string(v) + " is not in layer " + std::to_string(r.k));
        }
    }
    std::vector<VertexSubset> sorted = r.embedding;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        return fail("two vertices share the image " + dup->to_string());
    }
    for (const Edge& e : g.edges()) {
        if (!cube_adjacent(r.embedding[e.u], r.embedding[e.v])) {
            return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not a hypercube edge");
        }
        if (r.is_top(e.u) == r.is_top(e.v)) {
            return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins two vertices on one side");
        }
    }
    if (static_cast<int>(r.parts.size()) != r.k) return fail("expected " + std::to_string(r.k) + " parts");
    std::uint32_t covered = 0;
    for (std::size_t i = 0; i < r.parts.size(); ++i) {
        if ((r.parts[i].bits() & ~universe) != 0) return fail("part " + std::to_string(i) + " escapes [n]");
        if ((covered & r.parts[i].bits()) != 0) return fail("part " + std::to_string(i) + " overlaps an earlier part");
        covered |= r.parts[i].bits();
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!r.is_top(v)) continue;
        const VertexSubset& img = r.embedding[v];
        if ((img.bits() & ~covered) != 0) return fail("hyperedge " + img.to_string() + " has elements in no part");
        for (std::size_t i = 0; i < r.parts.size(); ++i) {
            if (std::popcount(img.bits() & r.parts[i].bits()) != 1) {
                return fail("hyperedge " + img.to_string() + " does not meet part " + std::to_string(i) + " exactly once");
            }
        }
    }
    return {true, {}};
}

Representation theta_representation(int q) {
    if (q < 2) throw DomainError("theta_representation needs q >= 2");
    const int n = q + 2;
    if (n > kMaxGroundSet) throw ResourceLimitError("theta_representation: q + 2 exceeds the ground set cap");
    const Graph kq2 = complete_bipartite(q, 2);
    Representation r;
    r.k = 2;
    r.n = n;
    r.embedding.resize(kq2.vertex_count() + kq2.edge_count());
    r.embedding[q] = VertexSubset::of({1}, n);
    r.embedding[q + 1] = VertexSubset::of({2}, n);
    for (int middle = 0; middle < q; ++middle) r.embedding[middle] = VertexSubset::of({middle + 3}, n);
    for (int i = 0; i < kq2.edge_count(); ++i) {
        const Edge& e = kq2.edges()[i];
        r.embedding[kq2.vertex_count() + i] =
            VertexSubset(r.embedding[e.u].bits() | r.embedding[e.v].bits(), n);
    }
    r.parts = {VertexSubset::of({1, 2}, n), VertexSubset((((1U << q) - 1U) << 2), n)};
    return r;
}

Representation pad_representation(const Representation& r) {
    if (r.n + 1 > kMaxGroundSet) throw ResourceLimitError("pad_representation: ground set cap reached");
    Representation out;
    out.k = r.k + 1;
    out.n = r.n + 1;
    for (const auto& img : r.embedding) out.embedding.push_back(img.widened(out.n).with(r.n));
    for (const auto& p : r.parts) out.parts.push_back(p.widened(out.n));
    out.parts.push_back(VertexSubset(0, out.n).with(r.n));
    return out;
}

SearchOutcome<Representation> find_representation(const Graph& g, int k, int n, const SearchBudget& budget) {
    if (g.vertex_count() == 0 || !g.is_connected()) throw DomainError("find_representation: guest must be connected");
    bipartition(g);  // throws NotBipartiteError naming the odd cycle
    if (k < 1 || k > n) throw DomainError("find_representation: need 1 <= k <= n");
    if (n > kMaxGroundSet) throw ResourceLimitError("find_representation: n above 30");

    BudgetTracker tracker(budget);
    detail::LayerEmbedder embedder(g, k, n, tracker);
    std::optional<std::vector<std::uint32_t>> found;
    std::vector<VertexSubset> scratch;
    detail::LayerEmbedder::Hooks hooks;
    hooks.accept_tops = [&](std::span<const std::uint32_t> tops) {
        scratch.clear();
        for (std::uint32_t t : tops) scratch.emplace_back(t, n);
        return detail::k_partition(Hypergraph(n, k, scratch), k, tracker, nullptr);
    };
    hooks.complete = [&](const std::vector<std::uint32_t>& image) {
        found = image;
        return false;
    };
    for (bool root_top : {true, false}) {
        embedder.run(root_top, hooks);
        if (found || tracker.exhausted()) break;
    }

    SearchOutcome<Representation> out;
    out.nodes_explored = tracker.nodes();
    if (!found) {
        out.status = tracker.exhausted() ? SearchStatus::inconclusive : SearchStatus::exhausted_none;
        return out;
    }
    Representation r;
    r.k = k;
    r.n = n;
    for (std::uint32_t b : *found) r.embedding.emplace_back(b, n);
    BudgetTracker unlimited(SearchBudget{~0ULL, 1e9});
    if (!detail::k_partition(r.top_hypergraph(), k, unlimited, &r.parts)) {
        throw std::logic_error("find_representation: accepted tops are not k-partite");
    }
    out.status = SearchStatus::found;
    out.witness = std::move(r);
    return out;
}

BlocksRepresentationReport blocks_have_representations(const Graph& g, int k_max, int n_max,
                                                       const SearchBudget& budget, int threads) {
    if (k_max < 1 || n_max < 1) throw DomainError("blocks_have_representations: k_max and n_max must be positive");
    const BlockDecomposition decomposition = blocks(g);
    BlocksRepresentationReport report;
    report.cut_vertices = decomposition.cut_vertices;
    report.blocks.resize(decomposition.blocks.size());

    detail::parallel_for(decomposition.blocks.size(), threads, [&](std::size_t i) {
        BlockReport& block = report.blocks[i];
        block.edges = decomposition.blocks[i];
        block.vertices = block_vertices(block.edges);
        std::vector<int> local(g.vertex_count(), -1);
        for (std::size_t j = 0; j < block.vertices.size(); ++j) local[block.vertices[j]] = static_cast<int>(j);
        std::vector<Edge> edges;
        for (const Edge& e : block.edges) edges.emplace_back(local[e.u], local[e.v]);
        const Graph piece(static_cast<int>(block.vertices.size()), std::move(edges));

        try {
            bipartition(piece);
        } catch (const NotBipartiteError& err) {
            std::ostringstream msg;
            msg << "not bipartite: odd cycle";
            for (int v : err.odd_cycle()) msg << ' ' << block.vertices[v];
            block.obstruction = msg.str();
            return;
        }
        bool inconclusive = false;
        for (int k = 1; k <= k_max && !block.representation; ++k) {
            for (int n = k; n <= n_max; ++n) {
                SearchOutcome<Representation> r = find_representation(piece, k, n, budget);
                block.nodes_explored += r.nodes_explored;
                if (r.found()) {
                    block.k = k;
                    block.n = n;
                    block.representation = std::move(r.witness);
                    break;
                }
                if (r.status == SearchStatus::inconclusive) inconclusive = true;
            }
        }
        if (block.representation) {
            block.status = SearchStatus::found;
        } else if (inconclusive) {
            block.status = SearchStatus::inconclusive;
            block.obstruction = "search inconclusive within budget";
        } else {
            block.status = SearchStatus::exhausted_none;
            block.obstruction = "no representation with k <= " + std::to_string(k_max) + ", n <= " +
                                std::to_string(n_max);
        }
    });

    report.all_represented = std::all_of(report.blocks.begin(), report.blocks.end(),
                                         [](const BlockReport& b) { return b.status == SearchStatus::found; });
    if (report.all_represented) {
        report.verdict = "every block has a partite representation: zero Turan density";
    } else {
        report.verdict = "no verdict: some block has no representation in the searched range";
    }
    return report;
}

}  // namespace cubeturan
