#include "cubeturan/copies.hpp"

#include <algorithm>
#include <map>

#include "cubeturan/errors.hpp"

namespace cubeturan {

namespace {

// Guest vertices ordered so each one (after the first of its component) has a
// placed neighbour: most placed neighbours first, then higher degree, then lower index.
std::vector<Vertex> matching_order(const Graph& guest) {
    const int n = guest.vertex_count();
    std::vector<int> placed_neighbors(n, 0);
    std::vector<bool> placed(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best == -1 || placed_neighbors[v] > placed_neighbors[best] ||
                (placed_neighbors[v] == placed_neighbors[best] && guest.degree(v) > guest.degree(best))) {
                best = v;
            }
        }
        placed[best] = true;
        order.push_back(best);
        for (Vertex w : guest.neighbors(best)) ++placed_neighbors[w];
    }
    return order;
}

class CopySearch {
public:
    CopySearch(const Graph& host, const Graph& guest, std::size_t limit, const SearchBudget& budget)
        : host_(host), guest_(guest), limit_(limit), tracker_(budget), order_(matching_order(guest)) {
        map_.assign(guest.vertex_count(), -1);
        used_.assign(host.vertex_count(), false);
        // For each position, the guest neighbours placed earlier.
        std::vector<int> position(guest.vertex_count());
        for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = static_cast<int>(i);
        earlier_.resize(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) {
            for (Vertex w : guest.neighbors(order_[i])) {
                if (position[w] < static_cast<int>(i)) earlier_[i].push_back(w);
            }
        }
    }

    void run() { extend(0); }

    CopyEnumeration result() && {
        CopyEnumeration out;
        out.nodes_explored = tracker_.nodes();
        out.truncated = truncated_;
        out.copies.reserve(found_.size());
        for (auto& [edges, map] : found_) out.copies.push_back(Copy{std::move(map), edges});
        if (tracker_.exhausted() && !truncated_) {
            out.status = SearchStatus::inconclusive;
        } else {
            out.status = out.copies.empty() ? SearchStatus::exhausted_none : SearchStatus::found;
        }
        return out;
    }

private:
    bool done() const { return truncated_ || tracker_.exhausted(); }

    void extend(std::size_t depth) {
        if (depth == order_.size()) {
            record();
            return;
        }
        const Vertex g = order_[depth];
        const auto& earlier = earlier_[depth];
        auto try_candidate = [&](Vertex h) {
            if (done()) return;
            if (!tracker_.charge()) return;
            if (used_[h] || host_.degree(h) < guest_.degree(g)) return;
            for (std::size_t i = 1; i < earlier.size(); ++i) {
                if (!host_.has_edge(h, map_[earlier[i]])) return;
            }
            map_[g] = h;
            used_[h] = true;
            extend(depth + 1);
            used_[h] = false;
            map_[g] = -1;
        };
        if (!earlier.empty()) {
            for (Vertex h : host_.neighbors(map_[earlier.front()])) try_candidate(h);
        } else {
            for (Vertex h = 0; h < host_.vertex_count(); ++h) try_candidate(h);
        }
    }

    void record() {
        std::vector<Edge> edges;
        edges.reserve(guest_.edge_count());
        for (const Edge& e : guest_.edges()) edges.emplace_back(map_[e.u], map_[e.v]);
        std::sort(edges.begin(), edges.end());
        found_.try_emplace(std::move(edges), map_);
        if (limit_ != 0 && found_.size() >= limit_) truncated_ = true;
    }

    const Graph& host_;
    const Graph& guest_;
    std::size_t limit_;
    BudgetTracker tracker_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> earlier_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    // Keyed by host edge set so the first (lexicographically least in search
    // order) vertex map is kept per copy.
    std::map<std::vector<Edge>, std::vector<Vertex>> found_;
    bool truncated_ = false;
};

}  // namespace

CopyEnumeration enumerate_copies(const Graph& host, const Graph& guest, std::size_t limit,
                                 const SearchBudget& budget) {
    budget.validate();
    if (guest.edge_count() == 0) {
        CopyEnumeration out;
        if (guest.vertex_count() <= host.vertex_count()) {
            std::vector<Vertex> map(guest.vertex_count());
            for (int i = 0; i < guest.vertex_count(); ++i) map[i] = i;
            out.copies.push_back(Copy{std::move(map), {}});
            out.status = SearchStatus::found;
        }
        return out;
    }
    if (guest.vertex_count() > host.vertex_count() || guest.edge_count() > host.edge_count()) {
        return {};
    }
    CopySearch search(host, guest, limit, budget);
    search.run();
    return std::move(search).result();
}

bool is_free_of(const Graph& host, const Graph& guest, const SearchBudget& budget) {
    const CopyEnumeration r = enumerate_copies(host, guest, 1, budget);
    if (r.status == SearchStatus::inconclusive) throw DomainError("copy search inconclusive within budget");
    return r.copies.empty();
}

bool are_isomorphic(const Graph& a, const Graph& b, const SearchBudget& budget) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const CopyEnumeration r = enumerate_copies(a, b, 1, budget);
    if (r.status == SearchStatus::inconclusive) throw DomainError("isomorphism search inconclusive within budget");
    return !r.copies.empty();
}

}  // namespace cubeturan
