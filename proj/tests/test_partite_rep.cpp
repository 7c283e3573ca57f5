#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "cubeturan/constructions.hpp"
#include "cubeturan/copies.hpp"
#include "cubeturan/errors.hpp"
#include "cubeturan/hypergraph.hpp"
#include "cubeturan/partite_rep.hpp"

using namespace cubeturan;

namespace {

// Assigns every support element one of k parts in all possible ways.
bool brute_force_partite(const std::vector<std::uint32_t>& edges, int n, int k) {
    std::vector<int> elements;
    std::uint32_t support = 0;
    for (std::uint32_t e : edges) support |= e;
    for (int i = 0; i < n; ++i) {
        if ((support >> i) & 1U) elements.push_back(i);
    }
    std::vector<int> part(n, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < elements.size(); ++i) total *= k;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int x : elements) {
            part[x] = static_cast<int>(c % k);
            c /= k;
        }
        bool ok = true;
        for (std::uint32_t e : edges) {
            std::uint32_t seen = 0;
            for (std::uint32_t b = e; b != 0; b &= b - 1) seen |= 1U << part[std::countr_zero(b)];
            if (std::popcount(seen) != std::popcount(e)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Unreduced search over maps into V_k ∪ V_{k-1} of Q_n, in vertex order.
bool brute_force_representable(const Graph& g, int k, int n) {
    std::vector<std::uint32_t> layer;
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
        const int s = std::popcount(x);
        if (s == k || s == k - 1) layer.push_back(x);
    }
    std::vector<std::uint32_t> image(g.vertex_count());
    std::set<std::uint32_t> used;
    auto place = [&](auto&& self, Vertex v) -> bool {
        if (v == g.vertex_count()) {
            std::vector<std::uint32_t> tops;
            for (std::uint32_t x : image) {
                if (std::popcount(x) == k) tops.push_back(x);
            }
            return brute_force_partite(tops, n, k);
        }
        for (std::uint32_t x : layer) {
            if (used.count(x)) continue;
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (w < v && std::popcount(x ^ image[w]) != 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used.insert(x);
            image[v] = x;
            if (self(self, v + 1)) return true;
            used.erase(x);
        }
        return false;
    };
    return place(place, 0);
}

Representation c8_example() {
    Representation r;
    r.k = 2;
    r.n = 4;
    for (std::uint32_t b : {1U, 3U, 2U, 6U, 4U, 12U, 8U, 9U}) r.embedding.emplace_back(b, 4);
    r.parts = {VertexSubset::of({1, 3}, 4), VertexSubset::of({2, 4}, 4)};
    return r;
}

void check_is_copy(const Graph& guest, const Representation& r) {
    std::vector<VertexSubset> labels = r.embedding;
    std::vector<Edge> edges;
    for (const Edge& e : guest.edges()) edges.push_back(e);
    const Graph image(labels, edges, r.n);
    CHECK(are_isomorphic(image, guest));
}

}  // namespace

TEST_CASE("the 8-cycle example") {
    const Graph c8 = cycle_graph(8);
    Representation r = c8_example();
    CHECK(verify_representation(c8, r).ok);
    const Hypergraph tops = r.top_hypergraph();
    CHECK(tops.edges.size() == 4);
    r.parts = {VertexSubset::of({1, 2}, 4), VertexSubset::of({3, 4}, 4)};
    const RepresentationCheck bad = verify_representation(c8, r);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.message.empty());
}

TEST_CASE("verification catches every broken invariant") {
    const Graph c8 = cycle_graph(8);
    Representation r = c8_example();
    r.embedding[3] = r.embedding[1];
    CHECK_FALSE(verify_representation(c8, r).ok);

    r = c8_example();
    r.embedding[1] = VertexSubset::of({1, 2, 3}, 4);
    CHECK_FALSE(verify_representation(c8, r).ok);

    r = c8_example();
    r.embedding.pop_back();
    CHECK_FALSE(verify_representation(c8, r).ok);

    r = c8_example();
    r.parts.pop_back();
    CHECK_FALSE(verify_representation(c8, r).ok);

    r = c8_example();
    r.parts[1] = VertexSubset::of({2, 3, 4}, 4);
    CHECK_FALSE(verify_representation(c8, r).ok);

    r = c8_example();
    r.parts = {VertexSubset::of({1}, 4), VertexSubset::of({2, 4}, 4)};
    CHECK_FALSE(verify_representation(c8, r).ok);

    // Vertex 1 mapped off its neighbours.
    r = c8_example();
    std::swap(r.embedding[1], r.embedding[3]);
    CHECK_FALSE(verify_representation(c8, r).ok);
}

TEST_CASE("k-partiteness") {
    const Hypergraph square(4, 2, {VertexSubset::of({1, 2}, 4), VertexSubset::of({2, 3}, 4), VertexSubset::of({3, 4}, 4),
                                   VertexSubset::of({1, 4}, 4)});
    const auto found = is_k_partite(square, 2);
    REQUIRE(found.found());
    CHECK(is_partition_certificate(square, *found.witness));
    std::vector<VertexSubset> parts = *found.witness;
    std::sort(parts.begin(), parts.end());
    CHECK(parts == std::vector<VertexSubset>{VertexSubset::of({1, 3}, 4), VertexSubset::of({2, 4}, 4)});

    const Hypergraph triple(4, 3, {VertexSubset::of({1, 2, 4}, 4), VertexSubset::of({2, 3, 4}, 4),
                                   VertexSubset::of({1, 3, 4}, 4)});
    CHECK(is_k_partite(triple, 3).status == SearchStatus::exhausted_none);
    for (int k = 1; k <= 5; ++k) {
        CHECK(is_k_partite(Hypergraph(6, k, {VertexSubset::prefix(k, 6)}), k).found());
    }
    CHECK_THROWS_AS(Hypergraph(4, 2, {VertexSubset::of({1}, 4)}), DomainError);
}

TEST_CASE("k-partiteness agrees with brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int k = 2 + static_cast<int>(rng() % 3);
        const auto all = subsets_of_size(n, k);
        std::vector<VertexSubset> edges;
        const int m = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < m; ++i) edges.push_back(all[rng() % all.size()]);
        const Hypergraph h(n, k, edges);
        std::vector<std::uint32_t> bits;
        for (const auto& e : h.edges) bits.push_back(e.bits());
        const auto r = is_k_partite(h, k);
        REQUIRE(r.status != SearchStatus::inconclusive);
        CHECK(r.found() == brute_force_partite(bits, n, k));
        if (r.found()) CHECK(is_partition_certificate(h, *r.witness));
    }
}

TEST_CASE("theta representations") {
    for (int q = 2; q <= 8; ++q) {
        const Representation r = theta_representation(q);
        CHECK(r.k == 2);
        CHECK(r.n == q + 2);
        CHECK(verify_representation(theta(q).graph, r).ok);
    }
    const MarkedGraph t = theta(3);
    const Representation r = theta_representation(3);
    const Vertex a = t.marked(roles::kMainPoles)[0];
    const Vertex b = t.marked(roles::kMainPoles)[1];
    CHECK(r.embedding[a] == VertexSubset::of({1}, 5));
    CHECK(r.embedding[b] == VertexSubset::of({2}, 5));
    // The leg through the middle pole with image {3}.
    const Vertex middle = 0;
    CHECK(r.embedding[middle] == VertexSubset::of({3}, 5));
    std::vector<VertexSubset> leg;
    for (Vertex s : t.graph.neighbors(middle)) leg.push_back(r.embedding[s]);
    std::sort(leg.begin(), leg.end());
    CHECK(leg == std::vector<VertexSubset>{VertexSubset::of({1, 3}, 5), VertexSubset::of({2, 3}, 5)});
    std::vector<VertexSubset> tops = r.top_hypergraph().edges;
    CHECK(tops.size() == 6);
    for (const auto& e : tops) CHECK(e.size() == 2);
}

TEST_CASE("padding keeps representations valid") {
    for (int q = 2; q <= 5; ++q) {
        Representation r = theta_representation(q);
        for (int step = 0; step < 3; ++step) {
            r = pad_representation(r);
            CHECK(verify_representation(theta(q).graph, r).ok);
        }
        CHECK(r.k == 5);
    }
    const auto c8 = find_representation(cycle_graph(8), 2, 4);
    REQUIRE(c8.found());
    CHECK(verify_representation(cycle_graph(8), pad_representation(*c8.witness)).ok);
}

TEST_CASE("finding representations") {
    const auto c8 = find_representation(cycle_graph(8), 2, 4);
    REQUIRE(c8.found());
    CHECK(verify_representation(cycle_graph(8), *c8.witness).ok);
    check_is_copy(cycle_graph(8), *c8.witness);

    const auto t3 = find_representation(theta(3).graph, 2, 5);
    REQUIRE(t3.found());
    CHECK(verify_representation(theta(3).graph, *t3.witness).ok);
    check_is_copy(theta(3).graph, *t3.witness);

    CHECK(find_representation(h_graph(3).graph, 2, 7).status == SearchStatus::exhausted_none);
    CHECK(find_representation(theta(3).graph, 2, 5, SearchBudget::nodes(3)).status == SearchStatus::inconclusive);

    const auto edge = find_representation(Graph(2, {{0, 1}}), 1, 1);
    REQUIRE(edge.found());
    CHECK(verify_representation(Graph(2, {{0, 1}}), *edge.witness).ok);

    CHECK_THROWS_AS(find_representation(complete_graph(3), 2, 4), NotBipartiteError);
    CHECK_THROWS_AS(find_representation(Graph(4, {{0, 1}, {2, 3}}), 2, 4), DomainError);
    CHECK_THROWS_AS(find_representation(cycle_graph(4), 3, 2), DomainError);
}

TEST_CASE("representation search agrees with unreduced search") {
    std::vector<std::pair<std::string, Graph>> guests = {
        {"C4", cycle_graph(4)},
        {"C6", cycle_graph(6)},
        {"C8", cycle_graph(8)},
        {"P4", path_graph(4)},
        {"K13", complete_bipartite(1, 3)},
        {"K23", complete_bipartite(2, 3)},
        {"theta2 plus pendant", Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}, {0, 8}})},
        {"subdivided star", subdivide(complete_bipartite(1, 3)).graph},
        {"Q3", build_hypercube(3)},
    };
    for (const auto& [name, g] : guests) {
        for (int n = 1; n <= 5; ++n) {
            for (int k = 1; k <= std::min(n, 3); ++k) {
                CAPTURE(name);
                CAPTURE(k);
                CAPTURE(n);
                const auto r = find_representation(g, k, n);
                REQUIRE(r.status != SearchStatus::inconclusive);
                CHECK(r.found() == brute_force_representable(g, k, n));
                if (r.found()) CHECK(verify_representation(g, *r.witness).ok);
            }
        }
    }
}

TEST_CASE("theta representations agree with unreduced search") {
    for (int q = 3; q <= 4; ++q) {
        const Graph t = theta(q).graph;
        for (int n = 3; n <= q + 2; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            CHECK(find_representation(t, 2, n).found() == brute_force_representable(t, 2, n));
        }
    }
}

TEST_CASE("main poles sit at distance two in every unreduced layer embedding") {
    const MarkedGraph t = theta(3);
    const Vertex a = t.marked(roles::kMainPoles)[0];
    const Vertex b = t.marked(roles::kMainPoles)[1];
    const int n = 5;
    std::map<int, int> distances;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::uint32_t> layer;
        for (std::uint32_t x = 0; x < (1U << n); ++x) {
            if (std::popcount(x) == k || std::popcount(x) == k - 1) layer.push_back(x);
        }
        std::vector<std::uint32_t> image(t.graph.vertex_count());
        std::set<std::uint32_t> used;
        auto place = [&](auto&& self, Vertex v) -> void {
            if (v == t.graph.vertex_count()) {
                ++distances[std::popcount(image[a] ^ image[b])];
                return;
            }
            for (std::uint32_t x : layer) {
                if (used.count(x)) continue;
                bool ok = true;
                for (Vertex w : t.graph.neighbors(v)) {
                    if (w < v && std::popcount(x ^ image[w]) != 1) ok = false;
                }
                if (!ok) continue;
                used.insert(x);
                image[v] = x;
                self(self, v + 1);
                used.erase(x);
            }
        };
        place(place, 0);
    }
    REQUIRE_FALSE(distances.empty());
    CHECK(distances.size() == 1);
    CHECK(distances.begin()->first == 2);
}

TEST_CASE("gluing at top vertices") {
    const Representation c8 = c8_example();
    const MarkedGraph c8g{cycle_graph(8), {}};
    const Representation out = glue_top(c8, 1, c8, 3);
    CHECK(out.k == 4);
    CHECK(out.n == 8);
    CHECK(out.parts.size() == 4);
    CHECK(verify_representation(glue_at_vertex(c8g, 1, c8g, 3).graph, out).ok);
    CHECK(out.embedding[1].size() == 4);

    const MarkedGraph t = theta(3);
    const Representation tr = theta_representation(3);
    for (Vertex a : t.marked(roles::kSubdivisionVertices)) {
        for (Vertex b : t.marked(roles::kSubdivisionVertices)) {
            const Representation g = glue_top(tr, a, tr, b);
            CHECK(verify_representation(glue_at_vertex(t, a, t, b).graph, g).ok);
        }
    }

    // One hyperedge glued to its copy: the shared vertex gets u ∪ w.
    Representation single;
    single.k = 2;
    single.n = 2;
    single.embedding = {VertexSubset::of({1}, 2), VertexSubset::of({1, 2}, 2)};
    single.parts = {VertexSubset::of({1}, 2), VertexSubset::of({2}, 2)};
    const MarkedGraph edge{Graph(2, {{0, 1}}), {}};
    REQUIRE(verify_representation(edge.graph, single).ok);
    const Representation both = glue_top(single, 1, single, 1);
    CHECK(both.embedding[1] == VertexSubset(0b1111U, 4));
    CHECK(verify_representation(glue_at_vertex(edge, 1, edge, 1).graph, both).ok);

    CHECK_THROWS_AS(glue_top(c8, 0, c8, 1), DomainError);
    CHECK_THROWS_AS(glue_top(c8, 1, theta_representation(3), 0), DomainError);
}

TEST_CASE("gluing at bottom vertices") {
    const Representation c8 = c8_example();
    const MarkedGraph c8g{cycle_graph(8), {}};
    for (Vertex a : {0, 2, 4, 6}) {
        for (Vertex b : {0, 2, 4, 6}) {
            const Representation out = glue_bottom(c8, a, c8, b);
            CHECK(out.k == 2);
            CHECK(out.n == 7);
            CHECK(verify_representation(glue_at_vertex(c8g, a, c8g, b).graph, out).ok);
        }
    }
    const MarkedGraph t = theta(3);
    const Representation tr = theta_representation(3);
    for (Vertex a : t.marked(roles::kPoles)) {
        for (Vertex b : t.marked(roles::kMainPoles)) {
            const Representation out = glue_bottom(tr, a, tr, b);
            CHECK(verify_representation(glue_at_vertex(t, a, t, b).graph, out).ok);
        }
    }
    // Images already equal to [k-1]: nothing to relabel.
    const Representation same = glue_bottom(c8, 0, c8, 0);
    CHECK(same.embedding[0] == VertexSubset::of({1}, 7));
    CHECK_THROWS_AS(glue_bottom(c8, 1, c8, 0), DomainError);
}

TEST_CASE("gluing found representations of larger k") {
    // Any 6-cycle in a layer has the three tops of a non-partite triple.
    CHECK(find_representation(cycle_graph(6), 2, 5).status == SearchStatus::exhausted_none);
    CHECK(find_representation(cycle_graph(6), 3, 5).status == SearchStatus::exhausted_none);

    const Graph c8 = cycle_graph(8);
    const auto r = find_representation(c8, 3, 5);
    REQUIRE(r.found());
    const MarkedGraph c8g{c8, {}};
    int glued = 0;
    for (Vertex a = 0; a < 8; ++a) {
        for (Vertex b = 0; b < 8; ++b) {
            const bool top_a = r.witness->is_top(a);
            if (top_a != r.witness->is_top(b)) continue;
            const Representation out = top_a ? glue_top(*r.witness, a, *r.witness, b) : glue_bottom(*r.witness, a, *r.witness, b);
            CHECK(verify_representation(glue_at_vertex(c8g, a, c8g, b).graph, out).ok);
            ++glued;
        }
    }
    CHECK(glued == 32);
}

TEST_CASE("pole distances") {
    for (int n : {5, 6}) {
        const PoleDistanceReport r = pole_distance_scan(3, n);
        CHECK(r.status == SearchStatus::found);
        CHECK(r.all_distance_two());
        CHECK_FALSE(r.counterexample.has_value());
        CHECK(r.layers_closed == n);
    }
    const PoleDistanceReport two = pole_distance_scan(2, 4);
    CHECK(two.status == SearchStatus::found);
    CHECK_FALSE(two.all_distance_two());
    CHECK(two.counterexample.has_value());
    CHECK(pole_distance_scan(3, 5, SearchBudget::nodes(2)).status == SearchStatus::inconclusive);
    CHECK_THROWS_AS(pole_distance_scan(1, 4), DomainError);
}

TEST_CASE("pole scan is independent of the thread count") {
    const PoleDistanceReport a = pole_distance_scan(3, 6, {}, 1);
    const PoleDistanceReport b = pole_distance_scan(3, 6, {}, 4);
    CHECK(a.distances == b.distances);
    CHECK(a.embeddings_per_layer == b.embeddings_per_layer);
    CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("block predicate") {
    const BlocksRepresentationReport h3 = blocks_have_representations(h_graph(3).graph, 2, 5);
    CHECK(h3.all_represented);
    CHECK(h3.blocks.size() == 2);
    CHECK(h3.verdict == "every block has a partite representation: zero Turan density");
    for (const BlockReport& b : h3.blocks) CHECK(b.k == 2);

    const BlocksRepresentationReport tree = blocks_have_representations(path_graph(4), 2, 3);
    CHECK(tree.all_represented);
    for (const BlockReport& b : tree.blocks) CHECK(b.k == 1);

    const Graph tri(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    const BlocksRepresentationReport bad = blocks_have_representations(tri, 3, 5);
    CHECK_FALSE(bad.all_represented);
    CHECK(bad.verdict == "no verdict: some block has no representation in the searched range");
    CHECK(bad.blocks[0].obstruction.rfind("not bipartite", 0) == 0);

    const BlocksRepresentationReport a = blocks_have_representations(h_graph(3).graph, 2, 5, {}, 1);
    const BlocksRepresentationReport b = blocks_have_representations(h_graph(3).graph, 2, 5, {}, 3);
    for (std::size_t i = 0; i < a.blocks.size(); ++i) CHECK(a.blocks[i].representation == b.blocks[i].representation);
}

TEST_CASE("representation format") {
    const Representation r = theta_representation(3);
    const std::string text = representation_to_string(r);
    CHECK(text.rfind("rep k=2 n=5\n", 0) == 0);
    CHECK(parse_representation_string(text) == r);

    auto error_line = [](const std::string& s) -> std::size_t {
        try {
            parse_representation_string(s);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(error_line("v 0 1\n") == 1);
    CHECK(error_line("rep k=2 n=3\nv 0 1\nv 0 2\n") == 3);
    CHECK(error_line("rep k=2 n=3\nv 0 10\n") == 2);
    CHECK(error_line("rep k=2\n") == 1);
    CHECK(error_line("rep k=2 n=3\nw 0 1\n") == 2);
    CHECK(error_line("") == 1);
}
