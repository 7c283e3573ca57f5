#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "cubeturan/constructions.hpp"
#include "cubeturan/cubicality.hpp"
#include "cubeturan/errors.hpp"
#include "cubeturan/partite_rep.hpp"

using namespace cubeturan;

namespace {

// Unreduced search: every injective vertex map into Q_n, in vertex order.
bool brute_force_embeds(const Graph& g, int n) {
    const int size = 1 << n;
    if (g.vertex_count() > size) return false;
    std::vector<int> image(g.vertex_count(), -1);
    std::vector<bool> used(size, false);
    auto place = [&](auto&& self, Vertex v) -> bool {
        if (v == g.vertex_count()) return true;
        for (int x = 0; x < size; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (w < v && std::popcount(static_cast<unsigned>(x ^ image[w])) != 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[x] = true;
            image[v] = x;
            if (self(self, v + 1)) return true;
            used[x] = false;
        }
        image[v] = -1;
        return false;
    };
    return place(place, 0);
}

NiceColoring colors_around_cycle(std::vector<int> colors) {
    const int count = *std::max_element(colors.begin(), colors.end()) + 1;
    // cycle_graph edges sort as (0,1), (0,L-1), (1,2), (2,3), ...
    const int length = static_cast<int>(colors.size());
    NiceColoring c;
    c.color_count = count;
    const Graph cycle = cycle_graph(length);
    for (const Edge& e : cycle.edges()) c.color.push_back(e.v == e.u + 1 ? colors[e.u] : colors[length - 1]);
    return c;
}

Graph random_connected(std::mt19937_64& rng, int n, int extra) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    for (int i = 0; i < extra; ++i) {
        const int a = static_cast<int>(rng() % n);
        const int b = static_cast<int>(rng() % n);
        if (a != b) edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("verifying nice colourings of C4") {
    CHECK(verify_nice_coloring(cycle_graph(4), colors_around_cycle({0, 1, 0, 1})).nice);
    const ColoringCheck bad = verify_nice_coloring(cycle_graph(4), colors_around_cycle({0, 1, 2, 3}));
    CHECK_FALSE(bad.nice);
    CHECK_FALSE(bad.violating_cycle.empty());
    // Colours a,a,b,b: cycle condition holds, but the path 0-1-2 repeats a colour.
    const ColoringCheck path = verify_nice_coloring(cycle_graph(4), colors_around_cycle({0, 0, 1, 1}));
    CHECK_FALSE(path.nice);
}

TEST_CASE("verification rejects malformed input") {
    CHECK_THROWS_AS(verify_nice_coloring(Graph(4, {{0, 1}, {2, 3}}), NiceColoring{{0, 0}, 1}), DomainError);
    CHECK_THROWS_AS(verify_nice_coloring(cycle_graph(4), NiceColoring{{0, 1, 0}, 2}), DomainError);
    CHECK_THROWS_AS(verify_nice_coloring(cycle_graph(4), NiceColoring{{0, 1, 0, 5}, 2}), DomainError);
}

TEST_CASE("colour renaming keeps a colouring nice") {
    const Graph g = theta(3).graph;
    const auto found = find_nice_coloring(g, 6);
    REQUIRE(found.found());
    std::vector<int> perm(found.witness->color_count);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        NiceColoring renamed = *found.witness;
        for (int& c : renamed.color) c = perm[c];
        CHECK(verify_nice_coloring(g, renamed).nice);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("finding nice colourings") {
    const auto c8 = find_nice_coloring(cycle_graph(8), 3);
    REQUIRE(c8.found());
    CHECK(c8.witness->color_count <= 3);
    CHECK(find_nice_coloring(complete_graph(3), 10).status == SearchStatus::exhausted_none);
    const auto h3 = find_nice_coloring(h_graph(3).graph, 10);
    REQUIRE(h3.found());
    CHECK(verify_nice_coloring(h_graph(3).graph, *h3.witness).nice);
    for (int odd : {3, 5, 7}) {
        for (int c = 1; c <= 6; ++c) CHECK(find_nice_coloring(cycle_graph(odd), c).status == SearchStatus::exhausted_none);
    }
    CHECK(find_nice_coloring(h_graph(3).graph, 10, SearchBudget::nodes(2)).status == SearchStatus::inconclusive);
    CHECK_THROWS_AS(find_nice_coloring(cycle_graph(4), 0), DomainError);
}

TEST_CASE("colourings and embeddings convert both ways") {
    const Graph c4 = cycle_graph(4);
    const Embedding e = coloring_to_embedding(c4, colors_around_cycle({0, 1, 0, 1}));
    CHECK(e.n == 2);
    std::vector<VertexSubset> sorted = e.image;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<VertexSubset>{VertexSubset(0, 2), VertexSubset(1, 2), VertexSubset(2, 2),
                                              VertexSubset(3, 2)});

    const Embedding p = coloring_to_embedding(path_graph(2), NiceColoring{{0, 1}, 2});
    CHECK(p.image == std::vector<VertexSubset>{VertexSubset(0, 2), VertexSubset::of({1}, 2), VertexSubset::of({1, 2}, 2)});

    const Graph q2 = build_hypercube(2);
    const NiceColoring q2c = embedding_to_coloring(q2, Embedding{2, q2.labels()});
    CHECK(q2c.color_count == 2);
    CHECK(verify_nice_coloring(q2, q2c).nice);

    for (int q = 2; q <= 6; ++q) {
        const Graph t = theta(q).graph;
        const Representation r = theta_representation(q);
        const NiceColoring c = embedding_to_coloring(t, Embedding{r.n, r.embedding});
        CHECK(c.color_count == q + 2);
        CHECK(verify_nice_coloring(t, c).nice);
        // Back to an embedding: the original up to translation by the root image.
        const Embedding back = coloring_to_embedding(t, c);
        for (Vertex v = 0; v < t.vertex_count(); ++v) {
            CHECK((back.image[v].bits() ^ r.embedding[0].bits()) == r.embedding[v].bits());
        }
    }

    CHECK_THROWS_AS(coloring_to_embedding(c4, colors_around_cycle({0, 1, 2, 3})), DomainError);
    CHECK_THROWS_AS(embedding_to_coloring(c4, Embedding{2, {VertexSubset(0, 2), VertexSubset(1, 2), VertexSubset(0, 2),
                                                            VertexSubset(2, 2)}}),
                    DomainError);
}

TEST_CASE("direct embedding search") {
    CHECK(embed_in_hypercube(cycle_graph(6), 3).found());
    CHECK(embed_in_hypercube(cycle_graph(6), 2).status == SearchStatus::exhausted_none);
    const auto t = embed_in_hypercube(theta(3).graph, 5);
    REQUIRE(t.found());
    CHECK(is_valid_embedding(theta(3).graph, *t.witness));
    CHECK(embed_in_hypercube(complete_bipartite(2, 3), 6).status == SearchStatus::exhausted_none);
}

TEST_CASE("symmetry-reduced searches agree with unreduced search") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int vertices = 3 + static_cast<int>(rng() % 6);
        const Graph g = random_connected(rng, vertices, static_cast<int>(rng() % 5));
        for (int n = 1; n <= 4; ++n) {
            const bool truth = brute_force_embeds(g, n);
            const auto direct = embed_in_hypercube(g, n);
            const auto coloured = find_nice_coloring(g, n);
            REQUIRE(direct.status != SearchStatus::inconclusive);
            REQUIRE(coloured.status != SearchStatus::inconclusive);
            CHECK(direct.found() == truth);
            CHECK(coloured.found() == truth);
            if (direct.found()) CHECK(is_valid_embedding(g, *direct.witness));
            if (coloured.found()) CHECK(verify_nice_coloring(g, *coloured.witness).nice);
            ++checked;
        }
    }
    CHECK(checked == 240);
}
