#include "cubeturan/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "cubeturan/errors.hpp"

namespace cubeturan {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= vertex_count) {
            throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " outside vertex range");
        }
        if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw DomainError("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    }
    build_adjacency();
}

Graph::Graph(std::vector<VertexSubset> labels, std::vector<Edge> edges, int ground_set_size)
    : Graph(static_cast<int>(labels.size()), std::move(edges)) {
    if (ground_set_size < 0 || ground_set_size > kMaxGroundSet) {
        throw ResourceLimitError("ground set size outside [0, 30]");
    }
    for (auto& l : labels) {
        if (ground_set_size < 32 && (l.bits() >> ground_set_size) != 0) {
            throw DomainError("label " + l.to_string() + " escapes ground set");
        }
        l = VertexSubset(l.bits(), ground_set_size);
    }
    std::vector<VertexSubset> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("two vertices share a label");
    }
    for (const Edge& e : edges_) {
        if (!cube_adjacent(labels[e.u], labels[e.v])) {
            throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " joins labels that are not hypercube neighbours");
        }
    }
    labels_ = std::move(labels);
    ground_set_size_ = ground_set_size;
}

void Graph::build_adjacency() {
    std::vector<int> degree(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(vertex_count_ + 1, 0);
    for (int v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.assign(offsets_.back(), 0);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < vertex_count_; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
    const Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

const std::vector<VertexSubset>& Graph::labels() const {
    if (!labels_) throw DomainError("graph carries no hypercube labels");
    return *labels_;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> position(vertex_count_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (position.at(vertices[i]) != -1) throw DomainError("repeated vertex in induced()");
        position[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        if (position[e.u] >= 0 && position[e.v] >= 0) kept.emplace_back(position[e.u], position[e.v]);
    }
    if (labels_) {
        std::vector<VertexSubset> sub;
        sub.reserve(vertices.size());
        for (Vertex v : vertices) sub.push_back((*labels_)[v]);
        return Graph(std::move(sub), std::move(kept), *ground_set_size_);
    }
    return Graph(static_cast<int>(vertices.size()), std::move(kept));
}

Graph Graph::edge_subgraph(std::span<const Edge> edges) const {
    std::vector<Edge> kept(edges.begin(), edges.end());
    for (const Edge& e : kept) {
        if (!has_edge(e.u, e.v)) throw DomainError("edge_subgraph: edge not in graph");
    }
    if (labels_) return Graph(*labels_, std::move(kept), *ground_set_size_);
    return Graph(vertex_count_, std::move(kept));
}

bool Graph::is_connected() const {
    if (vertex_count_ == 0) return true;
    return static_cast<int>(bfs_tree(*this, 0).order.size()) == vertex_count_;
}

Graph build_hypercube(int n, int cap) {
    cap = std::min(cap, kMaxGroundSet);
    if (n < 0) throw DomainError("negative hypercube dimension");
    if (n > cap) {
        throw ResourceLimitError("hypercube dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    const std::uint32_t count = 1U << n;
    std::vector<VertexSubset> labels;
    labels.reserve(count);
    for (std::uint32_t b = 0; b < count; ++b) labels.emplace_back(b, n);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (count / 2));
    for (std::uint32_t b = 0; b < count; ++b) {
        for (int i = 0; i < n; ++i) {
            if (!((b >> i) & 1U)) edges.emplace_back(static_cast<Vertex>(b), static_cast<Vertex>(b | (1U << i)));
        }
    }
    return Graph(std::move(labels), std::move(edges), n);
}

Graph layer_subgraph(int n, int j) {
    if (n < 1 || n > kMaxGroundSet) throw ResourceLimitError("layer ground set outside [1, 30]");
    if (j < 1 || j > n) throw DomainError("layer index " + std::to_string(j) + " outside [1, " + std::to_string(n) + "]");
    std::vector<VertexSubset> labels = subsets_of_size(n, j - 1);
    const std::vector<VertexSubset> upper = subsets_of_size(n, j);
    const int lower_count = static_cast<int>(labels.size());
    labels.insert(labels.end(), upper.begin(), upper.end());
    std::vector<Edge> edges;
    for (int t = 0; t < static_cast<int>(upper.size()); ++t) {
        for (int i : upper[t].indices()) {
            const VertexSubset down = upper[t].without(i);
            auto it = std::lower_bound(labels.begin(), labels.begin() + lower_count, down);
            edges.emplace_back(static_cast<Vertex>(it - labels.begin()), lower_count + t);
        }
    }
    return Graph(std::move(labels), std::move(edges), n);
}

Graph cycle_graph(int length) {
    if (length < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
    return Graph(length, std::move(edges));
}

Graph path_graph(int edge_count) {
    if (edge_count < 0) throw DomainError("negative path length");
    std::vector<Edge> edges;
    for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
    return Graph(edge_count + 1, std::move(edges));
}

Graph complete_graph(int vertex_count) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    std::vector<Edge> edges;
    for (int a = 0; a < vertex_count; ++a) {
        for (int b = a + 1; b < vertex_count; ++b) edges.emplace_back(a, b);
    }
    return Graph(vertex_count, std::move(edges));
}

BlockDecomposition blocks(const Graph& g) {
    // Iterative Hopcroft-Tarjan with an edge stack.
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> found;
    int timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        int root_children = 0;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            auto nb = g.neighbors(v);
            if (next_child[v] < static_cast<int>(nb.size())) {
                const Vertex w = nb[next_child[v]++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    edge_stack.emplace_back(v, w);
                    if (v == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            const Vertex p = parent[v];
            if (p == -1) continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                if (p != root) is_cut[p] = true;
                std::vector<Edge> block;
                const Edge tree_edge(p, v);
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == tree_edge) break;
                }
                std::sort(block.begin(), block.end());
                found.push_back(std::move(block));
            }
        }
        if (root_children > 1) is_cut[root] = true;
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    BlockDecomposition out;
    out.blocks = std::move(found);
    for (Vertex v = 0; v < n; ++v) {
        if (is_cut[v]) out.cut_vertices.push_back(v);
    }
    return out;
}

std::vector<Vertex> block_vertices(const std::vector<Edge>& block) {
    std::vector<Vertex> vs;
    for (const Edge& e : block) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int Bipartition::side_size(int s) const { return static_cast<int>(std::count(side.begin(), side.end(), s)); }

BfsTree bfs_tree(const Graph& g, Vertex root) {
    BfsTree tree;
    tree.parent.assign(g.vertex_count(), -1);
    if (g.vertex_count() == 0) return tree;
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<Vertex> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        tree.order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                tree.parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return tree;
}

Bipartition bipartition(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition result;
    result.side.assign(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, 0);
    for (Vertex root = 0; root < n; ++root) {
        if (result.side[root] != -1) continue;
        result.side[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (result.side[w] == -1) {
                    result.side[w] = 1 - result.side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (result.side[w] == result.side[v]) {
                    // Walk both ends up to their common ancestor.
                    std::vector<Vertex> left{v}, right{w};
                    Vertex a = v, b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    throw NotBipartiteError("graph has an odd cycle of length " + std::to_string(left.size()),
                                            std::move(left));
                }
            }
        }
    }
    return result;
}

bool is_bipartite(const Graph& g) {
    try {
        bipartition(g);
        return true;
    } catch (const NotBipartiteError&) {
        return false;
    }
}

}  // namespace cubeturan
