#pragma once

#include <atomic>
#include <bitset>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <algorithm>
#include <span>
#include <vector>

#include "cubeturan/graph.hpp"
#include "cubeturan/hypergraph.hpp"
#include "cubeturan/search.hpp"

namespace cubeturan::detail {

/// is_k_partite on a caller-owned tracker. Fills `parts` on success.
bool k_partition(const Hypergraph& h, int k, BudgetTracker& tracker, std::vector<VertexSubset>* parts);

inline constexpr int kMaxLayerGuest = 128;

/// Backtracking embedding of a connected bipartite guest into the layer L_k of Q_n.
///
/// Guest vertices are placed in BFS order from vertex 0; the root goes to
/// {1..k} (top) or {1..k-1} (bottom). Every later vertex differs from its BFS
/// parent in one element. Two candidate elements whose membership agrees on
/// every image placed so far are interchangeable by a transposition that
/// fixes the partial embedding, so only the smaller one is tried.
class LayerEmbedder {
public:
    struct Hooks {
        /// Called after each top vertex is placed with all top images so far; false prunes.
        std::function<bool(std::span<const std::uint32_t>)> accept_tops;
        /// Called with images indexed by guest vertex; false stops the search.
        std::function<bool(const std::vector<std::uint32_t>&)> complete;
    };

    /// Throws DomainError for a disconnected or non-bipartite guest and
    /// ResourceLimitError past kMaxLayerGuest vertices.
    LayerEmbedder(const Graph& guest, int k, int n, BudgetTracker& tracker);

    /// Returns false when a hook stopped the search or the budget ran out.
    bool run(bool root_is_top, const Hooks& hooks);

private:
    bool extend(std::size_t depth);
    bool fits(std::size_t depth, std::uint32_t candidate) const;
    void place(std::size_t depth, std::uint32_t image);
    void unplace(std::size_t depth);

    const Graph& guest_;
    int k_;
    int n_;
    BudgetTracker& tracker_;
    std::vector<Vertex> order_;
    std::vector<int> parent_pos_;
    std::vector<std::vector<int>> back_pos_;
    std::vector<int> parity_;

    const Hooks* hooks_ = nullptr;
    bool root_is_top_ = true;
    std::vector<std::uint32_t> image_;
    std::vector<std::uint32_t> tops_;
    std::vector<std::bitset<kMaxLayerGuest>> signature_;
    std::vector<std::uint32_t> by_vertex_;
    bool stopped_ = false;
};

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
/// written to per-index slots; the first exception by index is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(count, threads < 1 ? 1 : static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> errors(count);
    auto body = [&](std::size_t i) {
        try {
            fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) body(i);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace cubeturan::detail
