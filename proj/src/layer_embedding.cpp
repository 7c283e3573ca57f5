#include <algorithm>
#include <bit>

#include "cubeturan/errors.hpp"
#include "detail.hpp"

namespace cubeturan::detail {

LayerEmbedder::LayerEmbedder(const Graph& guest, int k, int n, BudgetTracker& tracker)
    : guest_(guest), k_(k), n_(n), tracker_(tracker) {
    if (guest.vertex_count() == 0 || !guest.is_connected()) throw DomainError("layer embedding needs a connected guest");
    if (guest.vertex_count() > kMaxLayerGuest) {
        throw ResourceLimitError("layer embedding supports at most " + std::to_string(kMaxLayerGuest) + " guest vertices");
    }
    if (n < 1 || n > kMaxGroundSet) throw ResourceLimitError("layer ground set outside [1, 30]");
    if (k < 1 || k > n) throw DomainError("layer index k outside [1, n]");
    const Bipartition sides = bipartition(guest);
    parity_ = sides.side;

    const BfsTree tree = bfs_tree(guest, 0);
    order_ = tree.order;
    std::vector<int> pos(guest.vertex_count(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = static_cast<int>(i);
    parent_pos_.assign(order_.size(), -1);
    back_pos_.resize(order_.size());
    for (std::size_t i = 1; i < order_.size(); ++i) {
        const Vertex v = order_[i];
        parent_pos_[i] = pos[tree.parent[v]];
        for (Vertex w : guest.neighbors(v)) {
            if (pos[w] < static_cast<int>(i) && w != tree.parent[v]) back_pos_[i].push_back(pos[w]);
        }
    }
}

bool LayerEmbedder::run(bool root_is_top, const Hooks& hooks) {
    hooks_ = &hooks;
    root_is_top_ = root_is_top;
    stopped_ = false;
    image_.assign(order_.size(), 0);
    tops_.clear();
    signature_.assign(n_, {});
    by_vertex_.assign(order_.size(), 0);

    const int root_size = root_is_top ? k_ : k_ - 1;
    const std::uint32_t root = root_size == 0 ? 0U : ((1U << root_size) - 1U);
    if (!tracker_.charge()) return false;
    place(0, root);
    if (root_is_top && hooks.accept_tops && !hooks.accept_tops(tops_)) {
        unplace(0);
        return true;
    }
    const bool finished = extend(1);
    unplace(0);
    return finished && !stopped_ && !tracker_.exhausted();
}

void LayerEmbedder::place(std::size_t depth, std::uint32_t image) {
    image_[depth] = image;
    for (std::uint32_t b = image; b != 0; b &= b - 1) signature_[std::countr_zero(b)].set(depth);
    const bool top = (parity_[order_[depth]] == parity_[order_[0]]) == root_is_top_;
    if (top) tops_.push_back(image);
}

void LayerEmbedder::unplace(std::size_t depth) {
    const std::uint32_t image = image_[depth];
    for (std::uint32_t b = image; b != 0; b &= b - 1) signature_[std::countr_zero(b)].reset(depth);
    const bool top = (parity_[order_[depth]] == parity_[order_[0]]) == root_is_top_;
    if (top) tops_.pop_back();
}

bool LayerEmbedder::fits(std::size_t depth, std::uint32_t candidate) const {
    for (std::size_t i = 0; i < depth; ++i) {
        if (image_[i] == candidate) return false;
    }
    for (int p : back_pos_[depth]) {
        if (std::popcount(candidate ^ image_[p]) != 1) return false;
    }
    return true;
}

// Returns false once the search must stop (hook or budget).
bool LayerEmbedder::extend(std::size_t depth) {
    if (depth == order_.size()) {
        for (std::size_t i = 0; i < order_.size(); ++i) by_vertex_[order_[i]] = image_[i];
        if (hooks_->complete && !hooks_->complete(by_vertex_)) {
            stopped_ = true;
            return false;
        }
        return true;
    }
    const std::uint32_t parent = image_[parent_pos_[depth]];
    const bool top = (parity_[order_[depth]] == parity_[order_[0]]) == root_is_top_;
    // Top vertices add an element missing from the parent, bottom vertices drop one.
    const std::uint32_t pool = top ? (~parent & ((n_ >= 32 ? 0U : (1U << n_)) - 1U)) : parent;
    std::vector<std::bitset<kMaxLayerGuest>> tried;
    for (std::uint32_t rest = pool; rest != 0; rest &= rest - 1) {
        const int e = std::countr_zero(rest);
        if (std::find(tried.begin(), tried.end(), signature_[e]) != tried.end()) continue;
        tried.push_back(signature_[e]);
        if (!tracker_.charge()) return false;
        const std::uint32_t candidate = parent ^ (1U << e);
        if (!fits(depth, candidate)) continue;
        place(depth, candidate);
        bool keep_going = true;
        if (!top || !hooks_->accept_tops || hooks_->accept_tops(tops_)) keep_going = extend(depth + 1);
        unplace(depth);
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace cubeturan::detail
