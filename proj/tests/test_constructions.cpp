#include <doctest.h>

#include <algorithm>

#include "cubeturan/constructions.hpp"
#include "cubeturan/copies.hpp"
#include "cubeturan/errors.hpp"

using namespace cubeturan;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace

TEST_CASE("subdivision") {
    const MarkedGraph c6 = subdivide(complete_graph(3));
    CHECK(are_isomorphic(c6.graph, cycle_graph(6)));
    CHECK(c6.marked(roles::kPoles) == std::vector<Vertex>{0, 1, 2});
    CHECK(c6.marked(roles::kSubdivisionVertices) == std::vector<Vertex>{3, 4, 5});
    CHECK(are_isomorphic(subdivide(Graph(2, {{0, 1}})).graph, path_graph(2)));
    const MarkedGraph t = subdivide(complete_bipartite(3, 2));
    CHECK(t.graph.vertex_count() == 11);
    CHECK(t.graph.edge_count() == 12);
    for (int n = 3; n <= 6; ++n) CHECK(is_bipartite(subdivide(complete_graph(n)).graph));
}

TEST_CASE("complete bipartite graphs") {
    CHECK(complete_bipartite(1, 1).edge_count() == 1);
    const Graph k32 = complete_bipartite(3, 2);
    CHECK(k32.vertex_count() == 5);
    CHECK(k32.edge_count() == 6);
    CHECK(k32.degree(0) == 2);
    CHECK(k32.degree(3) == 3);
    CHECK(degree_sequence(complete_bipartite(2, 4)) == std::vector<int>{4, 4, 2, 2, 2, 2});
    CHECK_THROWS_AS(complete_bipartite(0, 2), DomainError);
}

TEST_CASE("theta graphs") {
    CHECK(are_isomorphic(theta(2).graph, cycle_graph(8)));
    const MarkedGraph t3 = theta(3);
    CHECK(t3.graph.vertex_count() == 11);
    CHECK(t3.graph.edge_count() == 12);
    const std::vector<int> degrees = degree_sequence(t3.graph);
    CHECK(std::count(degrees.begin(), degrees.end(), 3) == 2);
    const auto& main = t3.marked(roles::kMainPoles);
    REQUIRE(main.size() == 2);
    CHECK(t3.graph.degree(main[0]) == 3);
    CHECK(t3.graph.degree(main[1]) == 3);
    const Graph t5 = theta(5).graph;
    CHECK(t5.vertex_count() == 17);
    CHECK(t5.edge_count() == 20);
    for (int q = 2; q <= 8; ++q) {
        const MarkedGraph t = theta(q);
        const Bipartition b = bipartition(t.graph);
        CHECK(b.side[t.marked(roles::kMainPoles)[0]] == b.side[t.marked(roles::kMainPoles)[1]]);
        CHECK(b.side_size(b.side[0]) == q + 2);
    }
    CHECK_THROWS_AS(theta(1), DomainError);
}

TEST_CASE("H graphs") {
    const MarkedGraph h3 = h_graph(3);
    CHECK(h3.graph.vertex_count() == 21);
    CHECK(h3.graph.edge_count() == 24);
    REQUIRE(h3.marked(roles::kSharedVertex).size() == 1);
    CHECK(h3.graph.degree(h3.marked(roles::kSharedVertex)[0]) == 5);
    const BlockDecomposition d4 = blocks(h_graph(4).graph);
    REQUIRE(d4.blocks.size() == 2);
    CHECK(d4.blocks[0].size() == 16);
    CHECK(d4.blocks[1].size() == 16);
    for (int q = 3; q <= 6; ++q) {
        const Graph h = h_graph(q).graph;
        CHECK(h.is_connected());
        CHECK(is_bipartite(h));
        CHECK(blocks(h).blocks.size() == 2);
        CHECK(blocks(h).cut_vertices.size() == 1);
    }
    CHECK_THROWS_AS(h_graph(2), DomainError);
}

TEST_CASE("every choice of subdivision vertex gives the same H(3)") {
    const MarkedGraph t = theta(3);
    const Graph reference = h_graph(3).graph;
    for (Vertex s : t.marked(roles::kSubdivisionVertices)) {
        for (Vertex pole : t.marked(roles::kMainPoles)) {
            const Graph g = glue_at_vertex(t, s, t, pole).graph;
            CHECK(are_isomorphic(g, reference));
        }
    }
}

TEST_CASE("gluing at a vertex") {
    const MarkedGraph edge{Graph(2, {{0, 1}}), {}};
    CHECK(are_isomorphic(glue_at_vertex(edge, 1, edge, 0).graph, path_graph(2)));
    const MarkedGraph c8{cycle_graph(8), {}};
    const MarkedGraph two = glue_at_vertex(c8, 3, c8, 5);
    CHECK(two.graph.vertex_count() == 15);
    CHECK(two.graph.edge_count() == 16);
    CHECK(blocks(two.graph).cut_vertices == std::vector<Vertex>{3});
    CHECK(two.marked(roles::kSharedVertex) == std::vector<Vertex>{3});
    CHECK_THROWS_AS(glue_at_vertex(c8, 8, c8, 0), DomainError);

    for (int a = 0; a < 11; ++a) {
        for (int b = 0; b < 8; ++b) {
            const MarkedGraph g = glue_at_vertex(theta(3), a, c8, b);
            CHECK(g.graph.vertex_count() == 11 + 8 - 1);
            CHECK(g.graph.edge_count() == 12 + 8);
        }
    }
}

TEST_CASE("stars of copies") {
    const MarkedGraph edge{Graph(2, {{0, 1}}), {}};
    CHECK(are_isomorphic(star_of_copies(edge, 0, 5).graph, complete_bipartite(1, 5)));
    const MarkedGraph c8 = star_of_copies({cycle_graph(8), {}}, 2, 2);
    CHECK(c8.graph.vertex_count() == 15);
    CHECK(c8.graph.edge_count() == 16);
    const MarkedGraph t = theta(3);
    const MarkedGraph s = star_of_copies(t, t.marked(roles::kMainPoles)[0], 3);
    CHECK(s.graph.vertex_count() == 31);
    CHECK(s.graph.edge_count() == 36);
    CHECK(s.marked(roles::kSharedVertex).size() == 1);
    CHECK_THROWS_AS(star_of_copies(edge, 0, 0), DomainError);
}
