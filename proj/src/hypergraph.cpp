#include "cubeturan/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "cubeturan/errors.hpp"
#include "detail.hpp"

namespace cubeturan {

Hypergraph::Hypergraph(int ground, int uniformity, std::vector<VertexSubset> hyperedges)
    : n(ground), k(uniformity), edges(std::move(hyperedges)) {
    if (n < 0 || n > kMaxGroundSet) throw ResourceLimitError("hypergraph ground set outside [0, 30]");
    if (k < 0 || k > n) throw DomainError("hypergraph uniformity outside [0, n]");
    for (auto& e : edges) {
        if (e.size() != k) throw DomainError("hyperedge " + e.to_string() + " does not have " + std::to_string(k) + " elements");
        e = VertexSubset(e.bits(), n);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

VertexSubset Hypergraph::support() const {
    std::uint32_t bits = 0;
    for (const auto& e : edges) bits |= e.bits();
    return {bits, n};
}

namespace {

class PartColoring {
public:
    PartColoring(const Hypergraph& h, int k, BudgetTracker& tracker) : h_(h), k_(k), tracker_(tracker) {
        conflicts_.assign(h.n, 0);
        for (const auto& e : h.edges) {
            for (int x : e.indices()) conflicts_[x] |= e.bits() & ~(1U << x);
        }
        part_.assign(h.n, -1);
    }

    // Colours every piece; false when some piece has no colouring or the budget runs out.
    bool run() {
        std::uint32_t remaining = h_.support().bits();
        while (remaining != 0) {
            const int start = std::countr_zero(remaining);
            std::vector<int> order = component_order(start);
            for (int x : order) remaining &= ~(1U << x);
            if (!colour(order, 0, 0)) return false;
        }
        return true;
    }

    std::vector<VertexSubset> parts() const {
        std::vector<std::uint32_t> bits(k_, 0);
        for (int x = 0; x < h_.n; ++x) {
            if (part_[x] >= 0) bits[part_[x]] |= 1U << x;
        }
        std::vector<VertexSubset> out;
        for (std::uint32_t b : bits) out.emplace_back(b, h_.n);
        return out;
    }

private:
    std::vector<int> component_order(int start) const {
        std::vector<int> order;
        std::uint32_t seen = 1U << start;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (std::uint32_t nb = conflicts_[x] & ~seen; nb != 0; nb &= nb - 1) {
                const int y = std::countr_zero(nb);
                seen |= 1U << y;
                queue.push_back(y);
            }
        }
        return order;
    }

    bool colour(const std::vector<int>& order, std::size_t depth, int parts_used) {
        if (depth == order.size()) return true;
        const int x = order[depth];
        const int limit = std::min(parts_used + 1, k_);
        for (int p = 0; p < limit; ++p) {
            if (!tracker_.charge()) return false;
            bool clash = false;
            for (std::uint32_t nb = conflicts_[x]; nb != 0; nb &= nb - 1) {
                if (part_[std::countr_zero(nb)] == p) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            part_[x] = p;
            if (colour(order, depth + 1, std::max(parts_used, p + 1))) return true;
            part_[x] = -1;
            if (tracker_.exhausted()) return false;
        }
        return false;
    }

    const Hypergraph& h_;
    int k_;
    BudgetTracker& tracker_;
    std::vector<std::uint32_t> conflicts_;
    std::vector<int> part_;
};

}  // namespace

namespace detail {

bool k_partition(const Hypergraph& h, int k, BudgetTracker& tracker, std::vector<VertexSubset>* parts) {
    PartColoring colouring(h, k, tracker);
    if (!colouring.run()) return false;
    if (parts != nullptr) *parts = colouring.parts();
    return true;
}

}  // namespace detail

SearchOutcome<std::vector<VertexSubset>> is_k_partite(const Hypergraph& h, int k, const SearchBudget& budget) {
    if (k < 1) throw DomainError("is_k_partite needs k >= 1");
    if (h.k != k) throw DomainError("is_k_partite: hypergraph is " + std::to_string(h.k) + "-uniform, asked k=" +
                                    std::to_string(k));
    BudgetTracker tracker(budget);
    std::vector<VertexSubset> parts;
    const bool ok = detail::k_partition(h, k, tracker, &parts);
    SearchOutcome<std::vector<VertexSubset>> out;
    out.nodes_explored = tracker.nodes();
    if (ok) {
        out.status = SearchStatus::found;
        out.witness = std::move(parts);
    } else {
        out.status = tracker.exhausted() ? SearchStatus::inconclusive : SearchStatus::exhausted_none;
    }
    return out;
}

bool is_partition_certificate(const Hypergraph& h, const std::vector<VertexSubset>& parts) {
    if (static_cast<int>(parts.size()) != h.k) return false;
    std::uint32_t covered = 0;
    for (const auto& p : parts) {
        if ((covered & p.bits()) != 0) return false;
        covered |= p.bits();
    }
    if ((h.support().bits() & ~covered) != 0) return false;
    for (const auto& e : h.edges) {
        for (const auto& p : parts) {
            if (std::popcount(e.bits() & p.bits()) != 1) return false;
        }
    }
    return true;
}

}  // namespace cubeturan
