#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "cubeturan/constructions.hpp"
#include "cubeturan/copies.hpp"
#include "cubeturan/errors.hpp"
#include "cubeturan/turan_search.hpp"

using namespace cubeturan;

namespace {

// Largest edge subset of Q_n with no copy of the guest, checking every subset.
int brute_force_extremal(int n, const Graph& guest) {
    const Graph q = build_hypercube(n);
    const int m = q.edge_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best || size < guest.edge_count()) {
            if (size > best) best = size;
            continue;
        }
        std::vector<Edge> kept;
        for (int i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) kept.push_back(q.edges()[i]);
        }
        if (enumerate_copies(q.edge_subgraph(kept), guest, 1).copies.empty()) best = size;
    }
    return best;
}

// Largest k-uniform family on [n] avoiding the pattern, checking every family.
int brute_force_hypergraph(int n, int k, const Hypergraph& pattern) {
    const auto all = subsets_of_size(n, k);
    const int m = static_cast<int>(all.size());
    std::vector<int> elements = pattern.support().indices();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        std::vector<std::uint32_t> family;
        for (int i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) family.push_back(all[i].bits());
        }
        // Try every injective placement of the pattern's elements.
        bool contains = false;
        std::vector<int> target(n);
        for (int i = 0; i < n; ++i) target[i] = i;
        std::sort(target.begin(), target.end());
        do {
            bool all_in = true;
            for (const auto& e : pattern.edges) {
                std::uint32_t image = 0;
                for (int x : e.indices()) {
                    const auto pos = std::find(elements.begin(), elements.end(), x) - elements.begin();
                    image |= 1U << target[pos];
                }
                if (std::find(family.begin(), family.end(), image) == family.end()) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) {
                contains = true;
                break;
            }
        } while (std::next_permutation(target.begin(), target.end()));
        if (!contains) best = size;
    }
    return best;
}

Hypergraph graph_pattern(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<VertexSubset> out;
    for (auto [a, b] : edges) out.push_back(VertexSubset::of({a, b}, n));
    return Hypergraph(n, 2, out);
}

}  // namespace

TEST_CASE("small extremal numbers") {
    const ExtremalResult q2 = extremal_number(2, cycle_graph(4));
    CHECK(q2.value == 3);
    CHECK(q2.status == ExtremalStatus::exact);
    CHECK(q2.witness_edges.size() == 3);
    for (int n = 1; n <= 5; ++n) {
        const ExtremalResult r = extremal_number(n, complete_graph(3));
        CHECK(r.value == n << (n - 1));
        CHECK(r.status == ExtremalStatus::exact);
    }
    for (int n = 1; n <= 4; ++n) {
        const ExtremalResult r = extremal_number(n, Graph(2, {{0, 1}}));
        CHECK(r.value == 0);
        CHECK(r.status == ExtremalStatus::exact);
    }
    CHECK(extremal_number(3, cycle_graph(4)).value == brute_force_extremal(3, cycle_graph(4)));
    CHECK(extremal_number(4, cycle_graph(4)).value == 24);
    CHECK_THROWS_AS(extremal_number(3, Graph(3, {})), DomainError);
}

TEST_CASE("extremal numbers match exhaustive search on small cubes") {
    const std::vector<std::pair<std::string, Graph>> guests = {
        {"P2", path_graph(2)},       {"P3", path_graph(3)},  {"K13", complete_bipartite(1, 3)},
        {"C4", cycle_graph(4)},      {"C6", cycle_graph(6)}, {"P4", path_graph(4)},
        {"2K2", Graph(4, {{0, 1}, {2, 3}})}, {"Q3", build_hypercube(3)},
    };
    for (const auto& [name, g] : guests) {
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            const ExtremalResult r = extremal_number(n, g, {}, name);
            REQUIRE(r.status == ExtremalStatus::exact);
            CHECK(r.value == brute_force_extremal(n, g));
            CHECK(static_cast<int>(r.witness_edges.size()) == r.value);
            const Graph q = build_hypercube(n);
            CHECK(enumerate_copies(q.edge_subgraph(r.witness_edges), g, 1).copies.empty());
        }
    }
}

TEST_CASE("witness is the lexicographically least optimum") {
    // Q_2 minus its largest edge in canonical order.
    const ExtremalResult r = extremal_number(2, cycle_graph(4));
    const Graph q2 = build_hypercube(2);
    CHECK(r.witness_edges == std::vector<Edge>(q2.edges().begin(), q2.edges().end() - 1));
}

TEST_CASE("budget exhaustion downgrades the status") {
    const ExtremalResult r = extremal_number(4, cycle_graph(4), SearchBudget::nodes(50));
    CHECK(r.status != ExtremalStatus::exact);
    if (r.status == ExtremalStatus::lower_bound) {
        CHECK(r.value <= 24);
        CHECK(enumerate_copies(build_hypercube(4).edge_subgraph(r.witness_edges), cycle_graph(4), 1).copies.empty());
    }
}

TEST_CASE("density sequences") {
    const DensitySequence c4 = density_sequence(cycle_graph(4), 2, 4);
    REQUIRE(c4.points.size() == 3);
    CHECK(c4.points[0].ratio == doctest::Approx(0.75));
    CHECK(c4.points[1].value == 9);
    CHECK(c4.points[1].host_edges == 12);
    CHECK(c4.non_increasing());
    for (const DensityPoint& p : density_sequence(complete_graph(3), 1, 5).points) CHECK(p.ratio == 1.0);
    for (const DensityPoint& p : density_sequence(Graph(2, {{0, 1}}), 1, 5).points) CHECK(p.ratio == 0.0);
    CHECK_THROWS_AS(density_sequence(cycle_graph(4), 3, 2), DomainError);
}

TEST_CASE("full vertices of up-sets") {
    const Graph l = layer_subgraph(3, 2);
    CHECK(up_set_full_vertices(l, VertexSubset(0, 3), 2) == 3);
    const Graph minus = l.edge_subgraph(std::vector<Edge>(l.edges().begin() + 1, l.edges().end()));
    CHECK(up_set_full_vertices(minus, VertexSubset(0, 3), 2) == 2);
    CHECK(up_set_full_vertices(l, VertexSubset::of({1}, 3), 1) == 2);
    CHECK_THROWS_AS(up_set_full_vertices(l, VertexSubset::of({1, 2}, 3), 2), DomainError);
    CHECK_THROWS_AS(up_set_full_vertices(cycle_graph(4), VertexSubset(0, 3), 2), DomainError);
}

TEST_CASE("star-count identity") {
    const StarCountReport full = star_count_identity(layer_subgraph(3, 2), 2, 2);
    CHECK(full.t == 3);
    CHECK(full.full_total() == 3);
    CHECK(full.per_x_full_counts.size() == 1);

    const Graph l = layer_subgraph(4, 2);
    const Graph sparse = l.edge_subgraph(std::vector<Edge>{l.edges()[0], l.edges()[5]});
    const StarCountReport none = star_count_identity(sparse, 2, 2);
    CHECK(none.t == 0);
    for (const auto& [x, u] : none.per_x_full_counts) CHECK(u == 0);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_layer_subgraph(6, 3, 0.5, seed);
        for (int k = 1; k <= 3; ++k) CHECK(star_count_identity(g, 3, k).identity_holds());
    }
    CHECK_THROWS_AS(star_count_identity(l, 2, 3), DomainError);
}

TEST_CASE("random layer subgraphs are reproducible") {
    const Graph a = random_layer_subgraph(6, 3, 0.5, 42);
    const Graph b = random_layer_subgraph(6, 3, 0.5, 42);
    CHECK(a == b);
    CHECK(a.vertex_count() == 35);
    CHECK(random_layer_subgraph(5, 2, 1.0, 1).edge_count() == 20);
    CHECK(random_layer_subgraph(5, 2, 0.0, 1).edge_count() == 0);
    CHECK_THROWS_AS(random_layer_subgraph(5, 2, 1.5, 1), DomainError);
}

TEST_CASE("middle-layer mass") {
    CHECK(middle_mass(4).numerator == 0);
    const MiddleMass m20 = middle_mass(20);
    CHECK(m20.to_string() == "211/524288");
    CHECK(middle_mass(10).to_string() == "1/512");
    CHECK(middle_mass(20) < middle_mass(10));
    CHECK(middle_mass(40) < middle_mass(20));
    CHECK(middle_mass(80) < middle_mass(40));
    for (int n = 1; n <= 120; ++n) {
        const MiddleMass m = middle_mass(n);
        CHECK(m.value() >= 0.0);
        CHECK(m.value() <= 1.0);
        // n^{2/3} >= n/2 exactly when n <= 8.
        if (n <= 8) CHECK(m.numerator == 0);
    }
    CHECK_THROWS_AS(middle_mass(0), DomainError);
}

TEST_CASE("hypergraph Turan numbers") {
    const Hypergraph path = graph_pattern(3, {{1, 2}, {2, 3}});
    CHECK(hypergraph_extremal(3, 2, path).value == 1);
    const Hypergraph c4 = graph_pattern(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const HypergraphExtremalResult four = hypergraph_extremal(4, 2, c4);
    CHECK(four.value == 4);
    CHECK(four.status == ExtremalStatus::exact);
    CHECK(four.value == brute_force_hypergraph(4, 2, c4));
    const HypergraphExtremalResult five = hypergraph_extremal(5, 2, c4);
    CHECK(five.value == brute_force_hypergraph(5, 2, c4));
    CHECK(five.value == 6);

    const Hypergraph triangle = graph_pattern(3, {{1, 2}, {2, 3}, {1, 3}});
    for (int n = 3; n <= 5; ++n) CHECK(hypergraph_extremal(n, 2, triangle).value == n * n / 4);

    const Hypergraph two_triples(4, 3, {VertexSubset::of({1, 2, 3}, 4), VertexSubset::of({1, 2, 4}, 4)});
    CHECK(hypergraph_extremal(5, 3, two_triples).value == brute_force_hypergraph(5, 3, two_triples));

    CHECK_THROWS_AS(hypergraph_extremal(4, 3, c4), DomainError);
    CHECK_THROWS_AS(hypergraph_extremal(20, 5, Hypergraph(5, 5, {VertexSubset::prefix(5, 5)})), ResourceLimitError);
}
