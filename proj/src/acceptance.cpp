#include "cubeturan/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cubeturan/constructions.hpp"
#include "cubeturan/copies.hpp"
#include "cubeturan/cubicality.hpp"
#include "cubeturan/errors.hpp"
#include "cubeturan/graph_io.hpp"
#include "cubeturan/hypergraph.hpp"
#include "cubeturan/partite_rep.hpp"
#include "cubeturan/turan_search.hpp"

namespace cubeturan {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass:
            return "PASS";
        case Verdict::fail:
            return "FAIL";
        case Verdict::inconclusive:
            return "INCONCLUSIVE";
    }
    return "FAIL";
}

namespace {

struct Tally {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool inconclusive = false;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& what) { notes.push_back(what); }
    void unknown(const std::string& what) {
        inconclusive = true;
        notes.push_back(what + " inconclusive");
    }
    // Records a search status that should have closed with the given answer.
    void expect_status(SearchStatus got, SearchStatus want, const std::string& what) {
        if (got == SearchStatus::inconclusive) {
            unknown(what);
        } else if (got != want) {
            failures.push_back(what + ": " + std::string(to_string(got)));
        }
    }
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

class Runner {
public:
    explicit Runner(const AcceptanceConfig& config) : config_(config) {}

    std::vector<CriterionResult> run() {
        std::vector<CriterionResult> out;
        out.push_back(timed(1, "constructions", 1.0, [&](Tally& t) { constructions(t); }));
        out.push_back(timed(2, "cubicality", 60.0, [&](Tally& t) { cubicality(t); }));
        out.push_back(timed(3, "representation fixtures", 1.0, [&](Tally& t) { representations(t); }));
        out.push_back(timed(4, "gluing", 10.0, [&](Tally& t) { gluing(t); }));
        out.push_back(timed(5, "non-partiteness certificate", 0.0, [&](Tally& t) { non_partite(t); }));
        out.push_back(timed(6, "pole-distance scan", 0.0, [&](Tally& t) { pole_scan(t); }));
        out.push_back(timed(7, "extremal numbers", 0.0, [&](Tally& t) { extremal(t); }));
        out.push_back(timed(8, "star-count identity", 30.0, [&](Tally& t) { star_count(t); }));
        out.push_back(timed(9, "middle-layer mass", 1.0, [&](Tally& t) { middle(t); }));
        out.push_back(timed(10, "block predicate", 0.0, [&](Tally& t) { block_predicate(t); }));
        if (config_.include_determinism) {
            out.push_back(timed(11, "determinism", 0.0, [&](Tally& t) { determinism(t, out); }));
        }
        return out;
    }

private:
    SearchBudget budget(std::uint64_t nodes) const { return SearchBudget::nodes(config_.budget_nodes.value_or(nodes)); }

    std::string fixture(const std::string& name) const { return config_.fixtures_dir + "/" + name; }

    Graph load_graph(const std::string& name) const {
        try {
            return read_graph_file(fixture(name)).graph;
        } catch (const ParseError& e) {
            throw std::runtime_error(fixture(name) + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                                     ": " + e.what());
        }
    }

    Representation load_rep(const std::string& name) const {
        try {
            return read_representation_file(fixture(name));
        } catch (const ParseError& e) {
            throw std::runtime_error(fixture(name) + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                                     ": " + e.what());
        }
    }

    CriterionResult timed(int id, const std::string& name, double limit, const std::function<void(Tally&)>& body) {
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(tally);
        } catch (const DomainError& e) {
            tally.expect(false, std::string("unexpected error: ") + e.what());
        } catch (const ResourceLimitError& e) {
            tally.expect(false, std::string("unexpected error: ") + e.what());
        }
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.time_limit = limit;
        if (limit > 0 && r.seconds >= limit) tally.expect(false, "runtime over " + std::to_string(int(limit)) + " s");
        if (!tally.failures.empty()) {
            r.verdict = Verdict::fail;
            r.detail = "failed: " + join(tally.failures);
        } else {
            r.verdict = tally.inconclusive ? Verdict::inconclusive : Verdict::pass;
            r.detail = join(tally.notes);
        }
        return r;
    }

    // Graph on the vertices of one block, numbered in ascending order.
    static Graph block_graph(const std::vector<Edge>& block) {
        const std::vector<Vertex> vs = block_vertices(block);
        std::vector<Edge> edges;
        for (const Edge& e : block) {
            const auto pos = [&](Vertex v) {
                return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
            };
            edges.emplace_back(pos(e.u), pos(e.v));
        }
        return Graph(static_cast<int>(vs.size()), std::move(edges));
    }

    void constructions(Tally& t) {
        for (int q = 2; q <= 8; ++q) {
            const Graph g = theta(q).graph;
            t.expect(g.vertex_count() == 3 * q + 2 && g.edge_count() == 4 * q, "size of theta(" + std::to_string(q) + ")");
        }
        for (int q = 3; q <= 6; ++q) {
            const std::string id = "H(" + std::to_string(q) + ")";
            const Graph h = h_graph(q).graph;
            t.expect(h.vertex_count() == 6 * q + 3 && h.edge_count() == 8 * q, "size of " + id);
            const BlockDecomposition d = blocks(h);
            t.expect(d.blocks.size() == 2 && d.cut_vertices.size() == 1, id + " has two blocks and one cut vertex");
            const Graph th = theta(q).graph;
            for (const auto& block : d.blocks) {
                const Graph piece = block_graph(block);
                if (piece.vertex_count() != th.vertex_count() || piece.edge_count() != th.edge_count()) {
                    t.expect(false, id + " block is not a theta graph");
                    continue;
                }
                const CopyEnumeration c = enumerate_copies(piece, th, 1, budget(10'000'000));
                if (c.status == SearchStatus::inconclusive) {
                    t.unknown(id + " block isomorphism");
                } else {
                    t.expect(!c.copies.empty(), id + " block is not a theta graph");
                }
            }
        }
        t.note("theta(2..8) and H(3..6) sizes and blocks match");
    }

    // Legs coloured c-4-5-c from one main pole to the other, colours 0-based.
    static NiceColoring figure_coloring() {
        const MarkedGraph th = theta(3);
        const Graph& g = th.graph;
        const Vertex first_main = th.marked(roles::kMainPoles)[0];
        const std::vector<Vertex>& subdivision = th.marked(roles::kSubdivisionVertices);
        auto is_sub = [&](Vertex v) { return std::binary_search(subdivision.begin(), subdivision.end(), v); };
        NiceColoring c;
        c.color_count = 5;
        for (const Edge& e : g.edges()) {
            const Vertex s = is_sub(e.u) ? e.u : e.v;
            const Vertex other = s == e.u ? e.v : e.u;
            const auto nb = g.neighbors(s);
            const Vertex a = nb[0] == other ? nb[1] : nb[0];
            if (other < 3) {
                c.color.push_back(g.has_edge(s, first_main) ? 3 : 4);
            } else {
                c.color.push_back(a);
            }
        }
        return c;
    }

    void cubicality(Tally& t) {
        const ColoringCheck fig = verify_nice_coloring(theta(3).graph, figure_coloring());
        t.expect(fig.nice, "figure colouring of theta(3): " + fig.message);
        if (fig.nice) {
            const Embedding e = coloring_to_embedding(theta(3).graph, figure_coloring());
            t.expect(e.n == 5 && is_valid_embedding(theta(3).graph, e), "figure colouring gives an embedding into Q_5");
        }

        const Graph h3 = h_graph(3).graph;
        const auto found = find_nice_coloring(h3, 10, budget(100'000'000));
        t.expect_status(found.status, SearchStatus::found, "nice colouring of H(3) with 10 colours");
        if (found.found()) t.expect(verify_nice_coloring(h3, *found.witness).nice, "H(3) colouring verifies");

        const auto start = std::chrono::steady_clock::now();
        for (int c = 1; c <= 6; ++c) {
            const auto r = find_nice_coloring(complete_graph(3), c, budget(1'000'000));
            t.expect_status(r.status, SearchStatus::exhausted_none, "K_3 with " + std::to_string(c) + " colours");
        }
        t.expect(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 1.0,
                 "K_3 search under 1 s");

        int round_trips = 0;
        std::vector<std::string> non_cubical;
        bool all_closed = true;
        for (const char* name : {"c4.el", "c6.el", "c8.el", "k3.el", "path5.el", "k23.el", "k3_pendant.el", "theta2.el",
                                 "theta3.el", "theta4.el", "h3.el", "q3.el", "l2_q3.el"}) {
            const Graph g = load_graph(name);
            const auto r = find_nice_coloring(g, 12, budget(100'000'000));
            if (r.status == SearchStatus::inconclusive) {
                t.unknown(std::string("colouring of ") + name);
                all_closed = false;
                continue;
            }
            if (!r.found()) {
                non_cubical.emplace_back(name);
                continue;
            }
            const Embedding e = coloring_to_embedding(g, *r.witness);
            t.expect(is_valid_embedding(g, e), std::string("embedding from colouring of ") + name);
            t.expect(embedding_to_coloring(g, e) == *r.witness, std::string("colouring round trip of ") + name);
            const NiceColoring back = embedding_to_coloring(g, e);
            t.expect(coloring_to_embedding(g, back) == e, std::string("embedding round trip of ") + name);
            ++round_trips;
        }
        if (all_closed) {
            // Two vertices of a hypercube share at most two neighbours, which rules out K_{2,3}.
            t.expect(non_cubical == std::vector<std::string>{"k3.el", "k23.el", "k3_pendant.el"},
                     "non-cubical fixtures are exactly k3, k23 and k3_pendant");
        }
        t.note("figure colouring nice; H(3) coloured; K_3 closed for c <= 6; " + std::to_string(round_trips) +
               " fixture round trips exact");
    }

    void representations(Tally& t) {
        for (int q = 2; q <= 8; ++q) {
            const RepresentationCheck c = verify_representation(theta(q).graph, theta_representation(q));
            t.expect(c.ok, "theta_representation(" + std::to_string(q) + "): " + c.message);
        }
        const Graph c8 = load_graph("c8.el");
        const Representation r = load_rep("c8.rep");
        const RepresentationCheck ok = verify_representation(c8, r);
        t.expect(ok.ok, "8-cycle representation: " + ok.message);
        std::vector<VertexSubset> tops = r.top_hypergraph().edges;
        const std::vector<VertexSubset> expected = {VertexSubset::of({1, 2}, 4), VertexSubset::of({2, 3}, 4),
                                                    VertexSubset::of({3, 4}, 4), VertexSubset::of({1, 4}, 4)};
        std::vector<VertexSubset> sorted_expected = expected;
        std::sort(sorted_expected.begin(), sorted_expected.end());
        t.expect(tops == sorted_expected, "8-cycle hyperedges are 12, 23, 34, 14");
        const Representation swapped = load_rep("c8_swapped.rep");
        t.expect(!verify_representation(c8, swapped).ok, "parts {1,2},{3,4} rejected");
        t.note("theta(2..8) verified; 8-cycle accepted with parts {1,3},{2,4} and rejected with {1,2},{3,4}");
    }

    void gluing(Tally& t) {
        struct Piece {
            Graph graph;
            Representation rep;
        };
        std::vector<Piece> pieces = {{load_graph("theta3.el"), load_rep("theta3.rep")},
                                     {load_graph("c8.el"), load_rep("c8.rep")}};
        for (const Piece& p : pieces) {
            const RepresentationCheck c = verify_representation(p.graph, p.rep);
            t.expect(c.ok, "fixture representation: " + c.message);
            if (!c.ok) return;
        }
        std::mt19937_64 rng(config_.seed);
        auto pick = [&](const Representation& r, bool top) {
            std::vector<Vertex> pool;
            for (Vertex v = 0; v < static_cast<Vertex>(r.embedding.size()); ++v) {
                if (r.is_top(v) == top) pool.push_back(v);
            }
            return pool[rng() % pool.size()];
        };
        int glued = 0;
        for (int i = 0; i < 200; ++i) {
            const bool top = i % 2 == 0;
            const Piece& a = pieces[rng() % pieces.size()];
            const Piece& b = pieces[rng() % pieces.size()];
            const Vertex va = pick(a.rep, top);
            const Vertex vb = pick(b.rep, top);
            const Representation out = top ? glue_top(a.rep, va, b.rep, vb) : glue_bottom(a.rep, va, b.rep, vb);
            const Graph g = glue_at_vertex({a.graph, {}}, va, {b.graph, {}}, vb).graph;
            const RepresentationCheck c = verify_representation(g, out);
            const std::string what = std::string(top ? "top" : "bottom") + " gluing #" + std::to_string(i);
            t.expect(c.ok, what + ": " + c.message);
            t.expect(out.k == (top ? 2 * a.rep.k : a.rep.k), what + " lands in the wrong layer");
            ++glued;
        }
        t.note(std::to_string(glued / 2) + " top and " + std::to_string(glued / 2) + " bottom gluings verified");
    }

    void non_partite(Tally& t) {
        const Hypergraph triple(4, 3, {VertexSubset::of({1, 2, 4}, 4), VertexSubset::of({2, 3, 4}, 4),
                                       VertexSubset::of({1, 3, 4}, 4)});
        t.expect_status(is_k_partite(triple, 3, budget(1'000'000)).status, SearchStatus::exhausted_none,
                        "triple {1,2,4},{2,3,4},{1,3,4} as 3-partite");
        const Graph h3 = h_graph(3).graph;
        int closed_up_to = 0;
        std::uint64_t nodes = 0;
        for (int n = 2; n <= 7; ++n) {
            const auto r = find_representation(h3, 2, n, budget(1'000'000'000));
            nodes += r.nodes_explored;
            if (r.status == SearchStatus::found) {
                t.expect(false, "H(3) represented at k=2, n=" + std::to_string(n));
                return;
            }
            if (r.status == SearchStatus::inconclusive) break;
            closed_up_to = n;
        }
        if (closed_up_to == 0) {
            t.unknown("H(3) representation search");
        } else {
            t.note("triple not 3-partite; H(3) has no 2-partite representation for n <= " + std::to_string(closed_up_to) +
                   " (" + std::to_string(nodes) + " nodes)");
        }
    }

    void pole_scan(Tally& t) {
        std::vector<std::string> parts;
        for (int n : {5, 6}) {
            const PoleDistanceReport r = pole_distance_scan(3, n, budget(100'000'000), config_.threads);
            const std::string what = "theta(3) in Q_" + std::to_string(n);
            t.expect_status(r.status, SearchStatus::found, what);
            if (r.status == SearchStatus::found) {
                t.expect(r.all_distance_two(), what + ": main poles not at distance 2");
                parts.push_back(what + ": " + std::to_string(r.total()) + " embeddings, all at distance 2");
            }
        }
        const PoleDistanceReport two = pole_distance_scan(2, 4, budget(100'000'000), config_.threads);
        if (two.status == SearchStatus::inconclusive) {
            t.unknown("theta(2) scan");
        } else {
            t.expect(two.counterexample.has_value(), "theta(2) in Q_4 has an embedding with poles not at distance 2");
            if (two.counterexample) {
                const MarkedGraph th = theta(2);
                const Embedding e{4, *two.counterexample};
                t.expect(is_valid_embedding(th.graph, e), "theta(2) counterexample is an embedding");
                const auto& poles = th.marked(roles::kMainPoles);
                const int d = hamming_distance(e.image[poles[0]], e.image[poles[1]]);
                t.expect(d != 2, "theta(2) counterexample poles at distance 2");
                parts.push_back("theta(2) in Q_4: poles at distance " + std::to_string(d));
            }
        }
        for (const auto& p : parts) t.note(p);
    }

    // All maximum C4-free edge sets of Q_3, by scanning every subset of its 12 edges.
    static int brute_force_c4_q3() {
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < 8; ++a) {
            for (int b = a + 1; b < 8; ++b) {
                if (std::popcount(static_cast<unsigned>(a ^ b)) == 1) edges.emplace_back(a, b);
            }
        }
        std::vector<std::uint32_t> cycles;
        for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
            if (std::popcount(mask) != 4) continue;
            int degree[8] = {};
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if ((mask >> i) & 1U) {
                    ++degree[edges[i].first];
                    ++degree[edges[i].second];
                }
            }
            int touched = 0;
            bool all_two = true;
            for (int d : degree) {
                if (d != 0) ++touched;
                if (d != 0 && d != 2) all_two = false;
            }
            if (all_two && touched == 4) cycles.push_back(mask);
        }
        int best = 0;
        for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
            bool free = true;
            for (std::uint32_t c : cycles) {
                if ((mask & c) == c) {
                    free = false;
                    break;
                }
            }
            if (free) best = std::max(best, std::popcount(mask));
        }
        return best;
    }

    void extremal(Tally& t) {
        const Graph c4 = load_graph("c4.el");
        const ExtremalResult q2 = extremal_number(2, c4, budget(10'000'000), "c4");
        if (q2.status == ExtremalStatus::exact) {
            t.expect(q2.value == 3, "ex(Q_2, C4) = " + std::to_string(q2.value));
        } else {
            t.unknown("ex(Q_2, C4)");
        }

        const int oracle = brute_force_c4_q3();
        const auto start = std::chrono::steady_clock::now();
        const ExtremalResult q3 = extremal_number(3, c4, budget(10'000'000), "c4");
        const double bb_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (q3.status == ExtremalStatus::exact) {
            t.expect(q3.value == oracle, "ex(Q_3, C4) = " + std::to_string(q3.value) + ", oracle " + std::to_string(oracle));
            t.expect(static_cast<int>(q3.witness_edges.size()) == q3.value, "witness size");
            t.expect(bb_seconds < 1.0, "branch and bound on Q_3 under 1 s");
        } else {
            t.unknown("ex(Q_3, C4)");
        }

        const Graph k3 = complete_graph(3);
        for (int n = 1; n <= 4; ++n) {
            const ExtremalResult r = extremal_number(n, k3, budget(10'000'000), "k3");
            if (r.status != ExtremalStatus::exact) {
                t.unknown("ex(Q_" + std::to_string(n) + ", K_3)");
                continue;
            }
            t.expect(r.value == n << (n - 1), "ex(Q_" + std::to_string(n) + ", K_3) = " + std::to_string(r.value));
        }

        const DensitySequence seq = density_sequence(c4, 1, 4, budget(10'000'000));
        std::string values;
        int exact = 0;
        for (const DensityPoint& p : seq.points) {
            if (p.status == ExtremalStatus::exact) ++exact;
            values += (values.empty() ? "" : " ") + std::to_string(p.value) + "/" + std::to_string(p.host_edges);
        }
        t.expect(seq.non_increasing(), "C4 density increases");
        if (exact < 2) t.unknown("C4 density sequence");
        if (q3.status == ExtremalStatus::exact) t.note("ex(Q_3, C4) = " + std::to_string(oracle) + " matches oracle");
        t.note("C4 densities " + values);
    }

    // Counts k-stars below each y in V_j by their leaf intersection, independently of up-set scans.
    static std::map<VertexSubset, std::int64_t> direct_star_counts(const Graph& g, int j, int k) {
        std::map<VertexSubset, std::int64_t> counts;
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
            if (g.label(y).size() != j) continue;
            const auto nb = g.neighbors(y);
            const int d = static_cast<int>(nb.size());
            if (d < k) continue;
            for (std::uint32_t pick = 0; pick < (1U << d); ++pick) {
                if (std::popcount(pick) != k) continue;
                std::uint32_t meet = g.label(y).bits();
                for (int i = 0; i < d; ++i) {
                    if ((pick >> i) & 1U) meet &= g.label(nb[i]).bits();
                }
                ++counts[VertexSubset(meet, g.label(y).ground_size())];
            }
        }
        return counts;
    }

    static bool matches_oracle(const Graph& g, int j, int k, const StarCountReport& r) {
        std::map<VertexSubset, std::int64_t> nonzero;
        for (const auto& [x, u] : r.per_x_full_counts) {
            if (u != 0) nonzero[x] = u;
        }
        return nonzero == direct_star_counts(g, j, k);
    }

    void star_count(Tally& t) {
        int checks = 0;
        for (int i = 0; i < 50; ++i) {
            const Graph g = random_layer_subgraph(6, 3, 0.6, config_.seed + i);
            for (int k : {2, 3}) {
                const StarCountReport r = star_count_identity(g, 3, k);
                t.expect(r.identity_holds(), "random sample " + std::to_string(i) + ", k=" + std::to_string(k));
                t.expect(matches_oracle(g, 3, k, r),
                         "star enumeration disagrees, sample " + std::to_string(i) + ", k=" + std::to_string(k));
                ++checks;
            }
        }
        for (int n = 3; n <= 6; ++n) {
            for (int j = 1; j <= n; ++j) {
                const Graph g = layer_subgraph(n, j);
                for (int k = 1; k <= j; ++k) {
                    const StarCountReport r = star_count_identity(g, j, k);
                    const std::string what = "complete L_" + std::to_string(j) + " of Q_" + std::to_string(n);
                    t.expect(r.identity_holds() && matches_oracle(g, j, k, r), what + ", k=" + std::to_string(k));
                    ++checks;
                }
            }
        }
        t.note(std::to_string(checks) + " identity checks agree with direct star enumeration");
    }

    void middle(Tally& t) {
        const MiddleMass zero = middle_mass(4);
        t.expect(zero.numerator == 0, "middle_mass(4) = " + zero.to_string());
        using boost::multiprecision::cpp_int;
        cpp_int tail = 0;
        cpp_int binom = 1;
        for (int i = 0; i <= 20; ++i) {
            if (i > 0) binom = binom * (20 - i + 1) / i;
            if (i < 3 || i > 17) tail += binom;
        }
        t.expect(middle_mass(20) == MiddleMass{tail, cpp_int(1) << 20}, "middle_mass(20) against direct sum");
        std::string chain;
        std::optional<MiddleMass> prev;
        for (int n : {10, 20, 40, 80}) {
            const MiddleMass m = middle_mass(n);
            if (prev) t.expect(m < *prev, "middle_mass not decreasing at n=" + std::to_string(n));
            chain += (chain.empty() ? "" : " > ") + m.to_string();
            prev = m;
        }
        t.note("middle_mass(4) = 0; " + chain);
    }

    void block_predicate(Tally& t) {
        const Graph h3 = load_graph("h3.el");
        const BlocksRepresentationReport r = blocks_have_representations(h3, 2, 5, budget(100'000'000), config_.threads);
        t.expect(r.blocks.size() == 2, "H(3) has two blocks");
        for (const BlockReport& b : r.blocks) {
            if (b.status == SearchStatus::inconclusive) {
                t.unknown("H(3) block representation");
                continue;
            }
            t.expect(b.representation.has_value(), "H(3) block without representation: " + b.obstruction);
            if (b.representation) {
                const RepresentationCheck c = verify_representation(block_graph(b.edges), *b.representation);
                t.expect(c.ok, "H(3) block representation: " + c.message);
            }
        }
        if (!t.inconclusive) {
            t.expect(r.all_represented && r.verdict == "every block has a partite representation: zero Turan density",
                     "H(3) verdict: " + r.verdict);
        }

        const Graph tri = load_graph("k3_pendant.el");
        const BlocksRepresentationReport bad = blocks_have_representations(tri, 2, 5, budget(100'000'000), config_.threads);
        const auto it = std::find_if(bad.blocks.begin(), bad.blocks.end(),
                                     [](const BlockReport& b) { return b.edges.size() == 3; });
        t.expect(!bad.all_represented, "K_3 graph reported as fully represented");
        t.expect(it != bad.blocks.end() && it->obstruction.rfind("not bipartite", 0) == 0, "K_3 block obstruction");
        t.note("H(3): " + r.verdict + "; K_3 block: " + (it != bad.blocks.end() ? it->obstruction : "missing"));
    }

    void determinism(Tally& t, const std::vector<CriterionResult>& first) {
        const std::string reference = render_results(first);
        for (int threads : {1, 8}) {
            AcceptanceConfig again = config_;
            again.include_determinism = false;
            again.threads = threads;
            const std::string text = render_results(Runner(again).run());
            t.expect(text == reference, "output differs with " + std::to_string(threads) + " threads");
        }
        t.note("criteria 1-10 byte-identical across reruns with 1 and 8 threads");
    }

    AcceptanceConfig config_;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) { return Runner(config).run(); }

std::string render_results(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const CriterionResult& r : results) {
        out << to_string(r.verdict) << "  " << r.id << "  " << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << '\n';
    }
    return out.str();
}

int acceptance_exit_code(const std::vector<CriterionResult>& results) {
    bool inconclusive = false;
    for (const CriterionResult& r : results) {
        if (r.verdict == Verdict::fail) return 1;
        if (r.verdict == Verdict::inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

}  // namespace cubeturan
