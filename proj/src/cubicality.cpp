#include "cubeturan/cubicality.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "cubeturan/errors.hpp"

namespace cubeturan {

namespace {

void require_connected(const Graph& g, const char* op) {
    if (g.vertex_count() == 0 || !g.is_connected()) {
        throw DomainError(std::string(op) + ": graph must be connected and non-empty");
    }
}

// Guest vertices in BFS order from vertex 0, with each position's parent
// position and the positions of all earlier neighbours except the parent.
struct BfsLayout {
    std::vector<Vertex> order;
    std::vector<int> parent_pos;
    std::vector<std::vector<int>> back_pos;

    explicit BfsLayout(const Graph& g) {
        const BfsTree tree = bfs_tree(g, 0);
        order = tree.order;
        std::vector<int> pos(g.vertex_count(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        parent_pos.assign(order.size(), -1);
        back_pos.resize(order.size());
        for (std::size_t i = 1; i < order.size(); ++i) {
            const Vertex v = order[i];
            parent_pos[i] = pos[tree.parent[v]];
            for (Vertex w : g.neighbors(v)) {
                if (pos[w] < static_cast<int>(i) && w != tree.parent[v]) back_pos[i].push_back(pos[w]);
            }
        }
    }
};

class PotentialSearch {
public:
    PotentialSearch(const Graph& g, int c_max, const SearchBudget& budget)
        : layout_(g), c_max_(c_max), tracker_(budget), potential_(layout_.order.size(), 0) {}

    bool run() { return extend(1, 0); }

    const std::vector<std::uint32_t>& potential() const { return potential_; }
    const BudgetTracker& tracker() const { return tracker_; }
    const BfsLayout& layout() const { return layout_; }

private:
    bool extend(std::size_t depth, int colors_used) {
        if (depth == potential_.size()) return true;
        const std::uint32_t parent = potential_[layout_.parent_pos[depth]];
        const int limit = std::min(colors_used + 1, c_max_);
        for (int c = 0; c < limit; ++c) {
            if (!tracker_.charge()) return false;
            const std::uint32_t phi = parent ^ (1U << c);
            if (!consistent(depth, phi)) continue;
            potential_[depth] = phi;
            if (extend(depth + 1, std::max(colors_used, c + 1))) return true;
            if (tracker_.exhausted()) return false;
        }
        return false;
    }

    bool consistent(std::size_t depth, std::uint32_t phi) const {
        for (int p : layout_.back_pos[depth]) {
            if (std::popcount(phi ^ potential_[p]) != 1) return false;
        }
        for (std::size_t i = 0; i < depth; ++i) {
            if (potential_[i] == phi) return false;
        }
        return true;
    }

    BfsLayout layout_;
    int c_max_;
    BudgetTracker tracker_;
    std::vector<std::uint32_t> potential_;
};

class DirectEmbeddingSearch {
public:
    DirectEmbeddingSearch(const Graph& g, int n, const SearchBudget& budget)
        : layout_(g), n_(n), tracker_(budget), image_(layout_.order.size(), 0) {}

    bool run() {
        // Root at ∅, its neighbours (the first positions whose parent is the
        // root) at e_0, e_1, ... in BFS order.
        std::size_t depth = 1;
        while (depth < image_.size() && layout_.parent_pos[depth] == 0) {
            const int bit = static_cast<int>(depth - 1);
            if (bit >= n_) return false;
            image_[depth] = 1U << bit;
            if (!fits(depth, image_[depth])) return false;
            ++depth;
        }
        return extend(depth);
    }

    const std::vector<std::uint32_t>& image() const { return image_; }
    const BudgetTracker& tracker() const { return tracker_; }
    const BfsLayout& layout() const { return layout_; }

private:
    bool extend(std::size_t depth) {
        if (depth == image_.size()) return true;
        const std::uint32_t parent = image_[layout_.parent_pos[depth]];
        for (int bit = 0; bit < n_; ++bit) {
            if (!tracker_.charge()) return false;
            const std::uint32_t candidate = parent ^ (1U << bit);
            if (!fits(depth, candidate)) continue;
            image_[depth] = candidate;
            if (extend(depth + 1)) return true;
            if (tracker_.exhausted()) return false;
        }
        return false;
    }

    bool fits(std::size_t depth, std::uint32_t candidate) const {
        for (std::size_t i = 0; i < depth; ++i) {
            if (image_[i] == candidate) return false;
        }
        for (int p : layout_.back_pos[depth]) {
            if (std::popcount(candidate ^ image_[p]) != 1) return false;
        }
        return true;
    }

    BfsLayout layout_;
    int n_;
    BudgetTracker tracker_;
    std::vector<std::uint32_t> image_;
};

// Root-path potentials along the BFS tree.
std::vector<std::uint32_t> potentials(const Graph& g, const NiceColoring& c, const BfsTree& tree) {
    std::vector<std::uint32_t> phi(g.vertex_count(), 0);
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
        const Vertex v = tree.order[i];
        const Vertex p = tree.parent[v];
        phi[v] = phi[p] ^ (1U << c.color[*g.edge_index(v, p)]);
    }
    return phi;
}

void check_coloring_shape(const Graph& g, const NiceColoring& c) {
    if (static_cast<int>(c.color.size()) != g.edge_count()) {
        throw DomainError("colouring covers " + std::to_string(c.color.size()) + " edges, graph has " +
                          std::to_string(g.edge_count()));
    }
    if (c.color_count < 0 || c.color_count > kMaxGroundSet) throw ResourceLimitError("colour count outside [0, 30]");
    for (int col : c.color) {
        if (col < 0 || col >= c.color_count) throw DomainError("edge colour outside [0, color_count)");
    }
}

}  // namespace

std::string embedding_violation(const Graph& g, const Embedding& e) {
    if (static_cast<int>(e.image.size()) != g.vertex_count()) return "image count differs from vertex count";
    if (e.n < 0 || e.n > kMaxGroundSet) return "ground set size out of range";
    for (std::size_t v = 0; v < e.image.size(); ++v) {
        if (e.n < 32 && (e.image[v].bits() >> e.n) != 0) {
            return "image of vertex " + std::to_string(v) + " escapes [n]";
        }
    }
    std::vector<std::uint32_t> bits;
    for (const auto& s : e.image) bits.push_back(s.bits());
    std::sort(bits.begin(), bits.end());
    if (std::adjacent_find(bits.begin(), bits.end()) != bits.end()) return "embedding is not injective";
    for (const Edge& edge : g.edges()) {
        if (!cube_adjacent(e.image[edge.u], e.image[edge.v])) {
            return "edge " + std::to_string(edge.u) + "-" + std::to_string(edge.v) + " is not a hypercube edge";
        }
    }
    return {};
}

bool is_valid_embedding(const Graph& g, const Embedding& e) { return embedding_violation(g, e).empty(); }

ColoringCheck verify_nice_coloring(const Graph& g, const NiceColoring& c) {
    require_connected(g, "verify_nice_coloring");
    check_coloring_shape(g, c);
    const BfsTree tree = bfs_tree(g, 0);
    const std::vector<std::uint32_t> phi = potentials(g, c, tree);

    ColoringCheck out;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if ((phi[e.u] ^ phi[e.v]) == (1U << c.color[i])) continue;
        // Fundamental cycle: u up to the common ancestor, back down to v.
        std::vector<Vertex> up_u{e.u}, up_v{e.v};
        std::vector<int> depth(g.vertex_count(), 0);
        for (std::size_t k = 1; k < tree.order.size(); ++k) {
            depth[tree.order[k]] = depth[tree.parent[tree.order[k]]] + 1;
        }
        Vertex a = e.u, b = e.v;
        while (depth[a] > depth[b]) up_u.push_back(a = tree.parent[a]);
        while (depth[b] > depth[a]) up_v.push_back(b = tree.parent[b]);
        while (a != b) {
            up_u.push_back(a = tree.parent[a]);
            up_v.push_back(b = tree.parent[b]);
        }
        up_v.pop_back();
        up_u.insert(up_u.end(), up_v.rbegin(), up_v.rend());
        out.violating_cycle = std::move(up_u);
        out.message = "cycle through edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " uses some colour an odd number of times";
        return out;
    }
    std::unordered_map<std::uint32_t, Vertex> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [it, inserted] = seen.emplace(phi[v], v);
        if (!inserted) {
            out.violating_pair = Edge(it->second, v);
            out.message = "path between " + std::to_string(it->second) + " and " + std::to_string(v) +
                          " uses every colour an even number of times";
            return out;
        }
    }
    out.nice = true;
    return out;
}

Embedding coloring_to_embedding(const Graph& g, const NiceColoring& c) {
    const ColoringCheck check = verify_nice_coloring(g, c);
    if (!check) throw DomainError("coloring_to_embedding: colouring is not nice: " + check.message);
    const std::vector<std::uint32_t> phi = potentials(g, c, bfs_tree(g, 0));
    Embedding out{c.color_count, {}};
    for (std::uint32_t b : phi) out.image.emplace_back(b, c.color_count);
    return out;
}

NiceColoring embedding_to_coloring(const Graph& g, const Embedding& e) {
    if (const std::string bad = embedding_violation(g, e); !bad.empty()) {
        throw DomainError("embedding_to_coloring: " + bad);
    }
    NiceColoring out{{}, e.n};
    out.color.reserve(g.edge_count());
    for (const Edge& edge : g.edges()) {
        out.color.push_back(std::countr_zero(e.image[edge.u].bits() ^ e.image[edge.v].bits()));
    }
    return out;
}

SearchOutcome<NiceColoring> find_nice_coloring(const Graph& g, int c_max, const SearchBudget& budget) {
    require_connected(g, "find_nice_coloring");
    if (c_max < 1) throw DomainError("find_nice_coloring: c_max must be at least 1");
    if (c_max > kMaxGroundSet) throw ResourceLimitError("find_nice_coloring: c_max above 30");
    PotentialSearch search(g, c_max, budget);
    const bool ok = search.run();
    SearchOutcome<NiceColoring> out;
    out.nodes_explored = search.tracker().nodes();
    if (!ok) {
        out.status = search.tracker().exhausted() ? SearchStatus::inconclusive : SearchStatus::exhausted_none;
        return out;
    }
    std::vector<std::uint32_t> phi(g.vertex_count());
    std::uint32_t support = 0;
    for (std::size_t i = 0; i < search.layout().order.size(); ++i) {
        phi[search.layout().order[i]] = search.potential()[i];
        support |= search.potential()[i];
    }
    NiceColoring coloring{{}, std::bit_width(support) == 0 ? 1 : static_cast<int>(std::bit_width(support))};
    for (const Edge& e : g.edges()) coloring.color.push_back(std::countr_zero(phi[e.u] ^ phi[e.v]));
    out.status = SearchStatus::found;
    out.witness = std::move(coloring);
    return out;
}

SearchOutcome<Embedding> embed_in_hypercube(const Graph& g, int n, const SearchBudget& budget) {
    require_connected(g, "embed_in_hypercube");
    if (n < 0 || n > kMaxGroundSet) throw ResourceLimitError("embed_in_hypercube: n outside [0, 30]");
    DirectEmbeddingSearch search(g, n, budget);
    const bool ok = search.run();
    SearchOutcome<Embedding> out;
    out.nodes_explored = search.tracker().nodes();
    if (!ok) {
        out.status = search.tracker().exhausted() ? SearchStatus::inconclusive : SearchStatus::exhausted_none;
        return out;
    }
    Embedding e{n, std::vector<VertexSubset>(g.vertex_count())};
    for (std::size_t i = 0; i < search.layout().order.size(); ++i) {
        e.image[search.layout().order[i]] = VertexSubset(search.image()[i], n);
    }
    out.status = SearchStatus::found;
    out.witness = std::move(e);
    return out;
}

}  // namespace cubeturan
