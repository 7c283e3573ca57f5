#include "cubeturan/constructions.hpp"

#include <algorithm>

#include "cubeturan/errors.hpp"

namespace cubeturan {

const std::vector<Vertex>& MarkedGraph::marked(const std::string& role) const {
    static const std::vector<Vertex> kNone;
    auto it = marks.find(role);
    return it == marks.end() ? kNone : it->second;
}

MarkedGraph subdivide(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    std::vector<Vertex> poles(n), subdivision(g.edge_count());
    for (Vertex v = 0; v < n; ++v) poles[v] = v;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        const Vertex mid = n + i;
        subdivision[i] = mid;
        edges.emplace_back(e.u, mid);
        edges.emplace_back(mid, e.v);
    }
    MarkedGraph out{Graph(n + g.edge_count(), std::move(edges)), {}};
    out.marks[roles::kPoles] = std::move(poles);
    out.marks[roles::kSubdivisionVertices] = std::move(subdivision);
    return out;
}

Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw DomainError("complete_bipartite needs s, t >= 1");
    std::vector<Edge> edges;
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < t; ++b) edges.emplace_back(a, s + b);
    }
    return Graph(s + t, std::move(edges));
}

MarkedGraph theta(int q) {
    if (q < 2) throw DomainError("theta(q) needs q >= 2");
    MarkedGraph out = subdivide(complete_bipartite(q, 2));
    out.marks[roles::kMainPoles] = {q, q + 1};
    return out;
}

std::vector<Vertex> glued_vertex_map(int a_vertex_count, Vertex a, int b_vertex_count, Vertex b) {
    std::vector<Vertex> map(b_vertex_count);
    Vertex next = a_vertex_count;
    for (Vertex v = 0; v < b_vertex_count; ++v) map[v] = v == b ? a : next++;
    return map;
}

MarkedGraph glue_at_vertex(const MarkedGraph& a_graph, Vertex a, const MarkedGraph& b_graph, Vertex b) {
    const Graph& ga = a_graph.graph;
    const Graph& gb = b_graph.graph;
    if (a < 0 || a >= ga.vertex_count()) throw DomainError("glue vertex a not in first graph");
    if (b < 0 || b >= gb.vertex_count()) throw DomainError("glue vertex b not in second graph");
    const std::vector<Vertex> map = glued_vertex_map(ga.vertex_count(), a, gb.vertex_count(), b);
    std::vector<Edge> edges = ga.edges();
    for (const Edge& e : gb.edges()) edges.emplace_back(map[e.u], map[e.v]);

    MarkedGraph out{Graph(ga.vertex_count() + gb.vertex_count() - 1, std::move(edges)), a_graph.marks};
    for (const auto& [role, vertices] : b_graph.marks) {
        auto& list = out.marks[role];
        for (Vertex v : vertices) list.push_back(map[v]);
    }
    for (auto& [role, list] : out.marks) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    out.marks[roles::kSharedVertex] = {a};
    return out;
}

MarkedGraph h_graph(int q) {
    if (q < 3) throw DomainError("h_graph(q) needs q >= 3");
    const MarkedGraph copy = theta(q);
    const Vertex first_main = copy.marked(roles::kMainPoles).front();
    const auto& subdivision = copy.marked(roles::kSubdivisionVertices);
    Vertex shared = -1;
    for (Vertex s : subdivision) {
        if (copy.graph.has_edge(first_main, s)) {
            shared = s;
            break;
        }
    }
    return glue_at_vertex(copy, shared, copy, first_main);
}

MarkedGraph star_of_copies(const MarkedGraph& b_graph, Vertex b, int q) {
    if (q < 1) throw DomainError("star_of_copies needs q >= 1");
    if (b < 0 || b >= b_graph.graph.vertex_count()) throw DomainError("star centre not in graph");
    MarkedGraph out = b_graph;
    for (int i = 1; i < q; ++i) out = glue_at_vertex(out, b, b_graph, b);
    out.marks[roles::kSharedVertex] = {b};
    return out;
}

}  // namespace cubeturan
