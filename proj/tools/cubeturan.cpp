#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeturan/acceptance.hpp"
#include "cubeturan/constructions.hpp"
#include "cubeturan/cubicality.hpp"
#include "cubeturan/errors.hpp"
#include "cubeturan/graph_io.hpp"
#include "cubeturan/partite_rep.hpp"
#include "cubeturan/turan_search.hpp"

#ifndef CUBETURAN_FIXTURES_DIR
#define CUBETURAN_FIXTURES_DIR "fixtures"
#endif

namespace {

using namespace cubeturan;
using Json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInput = 4;

// Thrown for bad input files; carries a "where:line:col: message" diagnostic.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int threads = 1;
    std::optional<std::uint64_t> budget_nodes;
    double budget_seconds = 600.0;
    std::uint64_t seed = 20240601;
};

bool json_output(const Options& o) { return o.format == "json"; }

SearchBudget budget_of(const Options& o) {
    SearchBudget b;
    if (o.budget_nodes) {
        b.max_nodes = *o.budget_nodes;
    } else if (const char* env = std::getenv("CUBETURAN_BUDGET_NODES")) {
        try {
            b.max_nodes = std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError(std::string("CUBETURAN_BUDGET_NODES is not a number: ") + env);
        }
    }
    b.max_seconds = o.budget_seconds;
    b.validate();
    return b;
}

int status_exit(SearchStatus s) {
    switch (s) {
        case SearchStatus::found:
            return kExitYes;
        case SearchStatus::exhausted_none:
            return kExitNo;
        case SearchStatus::inconclusive:
            return kExitInconclusive;
    }
    return kExitInconclusive;
}

std::string diagnostic(const std::string& where, const ParseError& e) {
    std::string message = e.what();
    const std::string prefix = "column " + std::to_string(e.column()) + ": ";
    if (const auto at = message.find(prefix); at != std::string::npos) message.erase(0, at + prefix.size());
    return where + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + message;
}

ParsedGraph load_graph(const std::string& path) {
    const std::string where = path.empty() || path == "-" ? "<stdin>" : path;
    try {
        if (where == "<stdin>") return parse_graph(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError(path + ": cannot open");
        return parse_graph(in);
    } catch (const ParseError& e) {
        throw InputError(diagnostic(where, e));
    }
}

Representation load_rep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    try {
        return parse_representation(in);
    } catch (const ParseError& e) {
        throw InputError(diagnostic(path, e));
    }
}

std::vector<std::string> hex_list(const std::vector<VertexSubset>& subsets) {
    std::vector<std::string> out;
    for (const auto& s : subsets) out.push_back(s.to_hex());
    return out;
}

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

Json rep_json(const Representation& r) {
    return Json{{"k", r.k}, {"n", r.n}, {"embedding", hex_list(r.embedding)}, {"parts", hex_list(r.parts)}};
}

void emit(const Json& record) { std::cout << record.dump() << '\n'; }

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    std::vector<int> params;
    std::string input;
    int vertex = 0;
    int copies = 2;
};

MarkedGraph build_family(const ConstructArgs& a) {
    auto need = [&](std::size_t count) {
        if (a.params.size() != count) {
            throw CLI::ValidationError(a.family + " takes " + std::to_string(count) + " integer argument(s)");
        }
    };
    const auto& p = a.params;
    if (a.family == "hypercube") {
        need(1);
        return {build_hypercube(p[0]), {}};
    }
    if (a.family == "layer") {
        need(2);
        return {layer_subgraph(p[0], p[1]), {}};
    }
    if (a.family == "theta") {
        need(1);
        return theta(p[0]);
    }
    if (a.family == "h") {
        need(1);
        return h_graph(p[0]);
    }
    if (a.family == "kst") {
        need(2);
        return {complete_bipartite(p[0], p[1]), {}};
    }
    if (a.family == "cycle") {
        need(1);
        return {cycle_graph(p[0]), {}};
    }
    if (a.family == "path") {
        need(1);
        return {path_graph(p[0]), {}};
    }
    if (a.family == "complete") {
        need(1);
        return {complete_graph(p[0]), {}};
    }
    if (a.family == "subdivide") {
        need(0);
        return subdivide(load_graph(a.input).graph);
    }
    if (a.family == "star") {
        need(0);
        const ParsedGraph g = load_graph(a.input);
        return star_of_copies({g.graph, g.marks}, a.vertex, a.copies);
    }
    throw CLI::ValidationError("unknown family '" + a.family + "'");
}

int run_construct(const Options&, const ConstructArgs& a) {
    const MarkedGraph g = build_family(a);
    write_graph(std::cout, g.graph, g.marks);
    return kExitYes;
}

// ---- cubicality ------------------------------------------------------------

int run_check_cubical(const Options& o, const std::string& input, int nmax) {
    const Graph g = load_graph(input).graph;
    const auto r = find_nice_coloring(g, nmax, budget_of(o));
    std::optional<Embedding> e;
    if (r.found()) e = coloring_to_embedding(g, *r.witness);
    if (json_output(o)) {
        Json rec{{"command", "check-cubical"}, {"status", to_string(r.status)}, {"nmax", nmax},
                 {"nodes", r.nodes_explored}};
        if (e) {
            rec["n"] = e->n;
            rec["embedding"] = hex_list(e->image);
        }
        emit(rec);
    } else {
        std::cout << "# status " << to_string(r.status) << " nodes " << r.nodes_explored << '\n';
        if (e) {
            std::cout << "n " << e->n << '\n';
            for (std::size_t v = 0; v < e->image.size(); ++v) std::cout << "v " << v << ' ' << e->image[v].to_hex() << '\n';
        }
    }
    return status_exit(r.status);
}

// ---- representations -------------------------------------------------------

int run_find_rep(const Options& o, const std::string& input, int k, int n) {
    const Graph g = load_graph(input).graph;
    const auto r = find_representation(g, k, n, budget_of(o));
    if (json_output(o)) {
        Json rec{{"command", "find-rep"}, {"status", to_string(r.status)}, {"k", k}, {"n", n}, {"nodes", r.nodes_explored}};
        if (r.witness) rec["representation"] = rep_json(*r.witness);
        emit(rec);
    } else {
        std::cout << "# status " << to_string(r.status) << " nodes " << r.nodes_explored << '\n';
        if (r.witness) write_representation(std::cout, *r.witness);
    }
    return status_exit(r.status);
}

int run_verify_rep(const Options& o, const std::string& input, const std::string& rep_path) {
    const Graph g = load_graph(input).graph;
    const Representation r = load_rep(rep_path);
    const RepresentationCheck c = verify_representation(g, r);
    if (json_output(o)) {
        emit(Json{{"command", "verify-rep"}, {"valid", c.ok}, {"message", c.message}});
    } else {
        std::cout << (c.ok ? "valid" : "invalid: " + c.message) << '\n';
    }
    return c.ok ? kExitYes : kExitNo;
}

struct GlueArgs {
    std::string mode = "top";
    std::string a_graph, a_rep, b_graph, b_rep;
    int a_vertex = 0;
    int b_vertex = 0;
    std::string graph_out;
};

int run_glue(const Options& o, const GlueArgs& a) {
    const ParsedGraph ga = load_graph(a.a_graph);
    const ParsedGraph gb = load_graph(a.b_graph);
    const Representation ra = load_rep(a.a_rep);
    const Representation rb = load_rep(a.b_rep);
    const Representation out =
        a.mode == "top" ? glue_top(ra, a.a_vertex, rb, a.b_vertex) : glue_bottom(ra, a.a_vertex, rb, a.b_vertex);
    const MarkedGraph glued = glue_at_vertex({ga.graph, ga.marks}, a.a_vertex, {gb.graph, gb.marks}, a.b_vertex);
    const RepresentationCheck c = verify_representation(glued.graph, out);
    if (!a.graph_out.empty()) {
        std::ofstream f(a.graph_out);
        if (!f) throw InputError(a.graph_out + ": cannot write");
        write_graph(f, glued.graph, glued.marks);
    }
    if (json_output(o)) {
        emit(Json{{"command", "glue"}, {"mode", a.mode}, {"valid", c.ok}, {"representation", rep_json(out)}});
    } else {
        std::cout << "# glue " << a.mode << ' ' << (c.ok ? "valid" : "invalid: " + c.message) << '\n';
        write_representation(std::cout, out);
    }
    return c.ok ? kExitYes : kExitNo;
}

int run_scan_poles(const Options& o, int q, int n) {
    const PoleDistanceReport r = pole_distance_scan(q, n, budget_of(o), o.threads);
    const bool claim = r.status == SearchStatus::found && r.all_distance_two();
    if (json_output(o)) {
        Json dist = Json::object();
        for (const auto& [d, c] : r.distances) dist[std::to_string(d)] = c;
        Json layers = Json::object();
        for (const auto& [k, c] : r.embeddings_per_layer) layers[std::to_string(k)] = c;
        Json rec{{"command", "scan-poles"}, {"q", q},          {"n", n},           {"status", to_string(r.status)},
                 {"distances", dist},       {"layers", layers}, {"all_distance_two", claim},
                 {"layers_closed", r.layers_closed},            {"nodes", r.nodes_explored}};
        if (r.counterexample) rec["counterexample"] = hex_list(*r.counterexample);
        emit(rec);
    } else {
        std::cout << "scan-poles q=" << q << " n=" << n << " status " << to_string(r.status) << " embeddings " << r.total()
                  << " layers_closed " << r.layers_closed << '\n';
        for (const auto& [d, c] : r.distances) std::cout << "distance " << d << ' ' << c << '\n';
        if (r.counterexample) {
            std::cout << "counterexample";
            for (const auto& s : *r.counterexample) std::cout << ' ' << s.to_hex();
            std::cout << '\n';
        }
    }
    if (r.status == SearchStatus::inconclusive) return kExitInconclusive;
    return claim ? kExitYes : kExitNo;
}

int run_blocks_rep(const Options& o, const std::string& input, int k_max, int n_max) {
    const Graph g = load_graph(input).graph;
    const BlocksRepresentationReport r = blocks_have_representations(g, k_max, n_max, budget_of(o), o.threads);
    bool inconclusive = false;
    for (std::size_t i = 0; i < r.blocks.size(); ++i) {
        const BlockReport& b = r.blocks[i];
        if (b.status == SearchStatus::inconclusive) inconclusive = true;
        if (json_output(o)) {
            Json rec{{"command", "blocks-rep"}, {"block", i},          {"vertices", b.vertices},
                     {"edges", edges_json(b.edges)}, {"status", to_string(b.status)}};
            if (b.representation) {
                rec["representation"] = rep_json(*b.representation);
            } else {
                rec["obstruction"] = b.obstruction;
            }
            rec["nodes"] = b.nodes_explored;
            emit(rec);
        } else {
            std::cout << "block " << i << " vertices " << b.vertices.size() << " edges " << b.edges.size() << ' '
                      << to_string(b.status);
            if (b.representation) {
                std::cout << " k=" << *b.k << " n=" << *b.n;
            } else {
                std::cout << " (" << b.obstruction << ')';
            }
            std::cout << '\n';
        }
    }
    if (json_output(o)) {
        emit(Json{{"command", "blocks-rep"}, {"cut_vertices", r.cut_vertices}, {"all_represented", r.all_represented},
                  {"verdict", r.verdict}});
    } else {
        std::cout << "verdict: " << r.verdict << '\n';
    }
    if (r.all_represented) return kExitYes;
    return inconclusive ? kExitInconclusive : kExitNo;
}

// ---- Turan numbers ---------------------------------------------------------

int extremal_exit(ExtremalStatus s) { return s == ExtremalStatus::exact ? kExitYes : kExitInconclusive; }

int run_extremal(const Options& o, int n, const std::string& guest_path) {
    const Graph guest = load_graph(guest_path).graph;
    const ExtremalResult r = extremal_number(n, guest, budget_of(o), guest_path);
    if (json_output(o)) {
        emit(Json{{"command", "extremal"},
                  {"n", r.n},
                  {"guest", r.guest_id},
                  {"value", r.value},
                  {"status", to_string(r.status)},
                  {"nodes", r.nodes_explored},
                  {"copies", r.copy_count},
                  {"witness", edges_json(r.witness_edges)}});
    } else {
        std::cout << "value " << r.value << '\n' << "status " << to_string(r.status) << '\n';
        std::cout << "copies " << r.copy_count << '\n' << "nodes " << r.nodes_explored << '\n';
        std::cout << "witness";
        for (const Edge& e : r.witness_edges) std::cout << ' ' << e.u << '-' << e.v;
        std::cout << '\n';
    }
    return extremal_exit(r.status);
}

int run_density(const Options& o, const std::string& guest_path, int from, int to) {
    const Graph guest = load_graph(guest_path).graph;
    const DensitySequence seq = density_sequence(guest, from, to, budget_of(o));
    bool all_exact = true;
    for (const DensityPoint& p : seq.points) {
        if (p.status != ExtremalStatus::exact) all_exact = false;
        if (json_output(o)) {
            emit(Json{{"command", "density"},
                      {"n", p.n},
                      {"value", p.value},
                      {"host_edges", p.host_edges},
                      {"ratio", p.ratio},
                      {"status", to_string(p.status)}});
        } else {
            std::ostringstream ratio;
            ratio.precision(6);
            ratio << std::fixed << p.ratio;
            std::cout << "n " << p.n << " value " << p.value << '/' << p.host_edges << " ratio " << ratio.str() << ' '
                      << to_string(p.status) << '\n';
        }
    }
    if (json_output(o)) {
        emit(Json{{"command", "density"}, {"non_increasing", seq.non_increasing()}, {"increases", seq.increases}});
    } else {
        std::cout << (seq.non_increasing() ? "non-increasing" : "INCREASE at n =");
        for (int n : seq.increases) std::cout << ' ' << n;
        std::cout << '\n';
    }
    if (!seq.non_increasing()) return kExitNo;
    return all_exact ? kExitYes : kExitInconclusive;
}

int run_starcount(const Options& o, int n, int j, int k, double p) {
    const Graph g = random_layer_subgraph(n, j, p, o.seed);
    const StarCountReport r = star_count_identity(g, j, k);
    if (json_output(o)) {
        Json per = Json::object();
        for (const auto& [x, u] : r.per_x_full_counts) {
            if (u != 0) per[x.to_hex()] = u;
        }
        emit(Json{{"command", "starcount"}, {"n", n},  {"j", j},          {"k", k},
                  {"edges", g.edge_count()}, {"t", r.t}, {"sum_u", r.full_total()}, {"holds", r.identity_holds()},
                  {"u", per}});
    } else {
        std::cout << "edges " << g.edge_count() << '\n'
                  << "t " << r.t << '\n'
                  << "sum_u " << r.full_total() << '\n'
                  << (r.identity_holds() ? "identity holds" : "identity FAILS") << '\n';
    }
    return r.identity_holds() ? kExitYes : kExitNo;
}

int run_middle_mass(const Options& o, int n) {
    const MiddleMass m = middle_mass(n);
    if (json_output(o)) {
        emit(Json{{"command", "middle-mass"}, {"n", n}, {"fraction", m.to_string()}, {"value", m.value()}});
    } else {
        std::cout << m.to_string() << '\n';
    }
    return kExitYes;
}

// ---- report ----------------------------------------------------------------

int run_report(const Options& o, const std::string& fixtures) {
    AcceptanceConfig config;
    config.fixtures_dir = fixtures;
    config.budget_nodes = o.budget_nodes;
    if (!config.budget_nodes) {
        if (const char* env = std::getenv("CUBETURAN_BUDGET_NODES")) config.budget_nodes = std::stoull(env);
    }
    config.threads = o.threads;
    config.seed = o.seed;
    std::vector<CriterionResult> results;
    try {
        results = run_acceptance(config);
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    if (json_output(o)) {
        for (const CriterionResult& r : results) {
            emit(Json{{"command", "report"},
                      {"criterion", r.id},
                      {"name", r.name},
                      {"verdict", to_string(r.verdict)},
                      {"detail", r.detail}});
        }
    } else {
        std::cout << render_results(results);
    }
    for (const CriterionResult& r : results) {
        std::ostringstream line;
        line.precision(3);
        line << std::fixed << "criterion " << r.id << ' ' << r.seconds << " s";
        if (r.time_limit > 0) line << " (limit " << r.time_limit << " s)";
        std::cerr << line.str() << '\n';
    }
    return acceptance_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turan problems in hypercubes: constructions, cubicality, partite representations, extremal numbers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("cubeturan format ") + kFormatVersion);

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--budget-nodes", opt.budget_nodes,
                   "Search node budget (default 1e8 or $CUBETURAN_BUDGET_NODES)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-seconds", opt.budget_seconds, "Search time budget")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "Seed for randomized checks");

    std::function<int()> action;

    ConstructArgs construct;
    auto* c = app.add_subcommand("construct", "Emit a graph family as an edge list");
    c->add_option("family", construct.family, "hypercube|layer|theta|h|kst|cycle|path|complete|subdivide|star")
        ->required();
    c->add_option("params", construct.params, "Integer parameters of the family");
    c->add_option("--input", construct.input, "Input graph for subdivide/star (default stdin)");
    c->add_option("--vertex", construct.vertex, "Shared vertex for star");
    c->add_option("--copies", construct.copies, "Number of copies for star");
    c->callback([&] { action = [&] { return run_construct(opt, construct); }; });

    std::string input;
    int nmax = 0;
    auto* cc = app.add_subcommand("check-cubical", "Search for a nice colouring with at most --nmax colours");
    cc->add_option("input", input, "Edge-list file (default stdin)");
    cc->add_option("--nmax", nmax, "Largest hypercube dimension")->required();
    cc->callback([&] { action = [&] { return run_check_cubical(opt, input, nmax); }; });

    int k = 0, n = 0;
    auto* fr = app.add_subcommand("find-rep", "Search for a k-partite representation in layer k of Q_n");
    fr->add_option("input", input, "Edge-list file (default stdin)");
    fr->add_option("--k", k, "Layer")->required();
    fr->add_option("--n", n, "Hypercube dimension")->required();
    fr->callback([&] { action = [&] { return run_find_rep(opt, input, k, n); }; });

    std::string rep_path;
    auto* vr = app.add_subcommand("verify-rep", "Check a representation file against a graph");
    vr->add_option("input", input, "Edge-list file (default stdin)");
    vr->add_option("--rep", rep_path, "Representation file")->required();
    vr->callback([&] { action = [&] { return run_verify_rep(opt, input, rep_path); }; });

    GlueArgs glue;
    auto* gl = app.add_subcommand("glue", "Glue two represented graphs at a vertex");
    gl->add_option("--mode", glue.mode, "top or bottom")->check(CLI::IsMember({"top", "bottom"}));
    gl->add_option("--a-graph", glue.a_graph)->required();
    gl->add_option("--a-rep", glue.a_rep)->required();
    gl->add_option("--a-vertex", glue.a_vertex)->required();
    gl->add_option("--b-graph", glue.b_graph)->required();
    gl->add_option("--b-rep", glue.b_rep)->required();
    gl->add_option("--b-vertex", glue.b_vertex)->required();
    gl->add_option("--graph-out", glue.graph_out, "Also write the glued graph here");
    gl->callback([&] { action = [&] { return run_glue(opt, glue); }; });

    int q = 0;
    auto* sp = app.add_subcommand("scan-poles", "Main-pole distances over all layer embeddings of theta(q)");
    sp->add_option("--q", q)->required();
    sp->add_option("--n", n)->required();
    sp->callback([&] { action = [&] { return run_scan_poles(opt, q, n); }; });

    int k_max = 0, n_max = 0;
    auto* br = app.add_subcommand("blocks-rep", "Partite representations for every block");
    br->add_option("input", input, "Edge-list file (default stdin)");
    br->add_option("--kmax", k_max)->required();
    br->add_option("--nmax", n_max)->required();
    br->callback([&] { action = [&] { return run_blocks_rep(opt, input, k_max, n_max); }; });

    std::string guest;
    auto* ex = app.add_subcommand("extremal", "ex(Q_n, H) by branch and bound");
    ex->add_option("--n", n)->required();
    ex->add_option("--guest", guest, "Guest edge-list file")->required();
    ex->callback([&] { action = [&] { return run_extremal(opt, n, guest); }; });

    int from = 0, to = 0;
    auto* de = app.add_subcommand("density", "ex(Q_n, H) / ||Q_n|| over a range of n");
    de->add_option("--guest", guest, "Guest edge-list file")->required();
    de->add_option("--from", from)->required();
    de->add_option("--to", to)->required();
    de->callback([&] { action = [&] { return run_density(opt, guest, from, to); }; });

    int j = 0;
    double density = 0.5;
    auto* sc = app.add_subcommand("starcount", "Star-count identity on a random subgraph of layer j");
    sc->add_option("--n", n)->required();
    sc->add_option("--j", j)->required();
    sc->add_option("--k", k)->required();
    sc->add_option("--density", density, "Edge probability")->check(CLI::Range(0.0, 1.0));
    sc->callback([&] { action = [&] { return run_starcount(opt, n, j, k, density); }; });

    auto* mm = app.add_subcommand("middle-mass", "Binomial mass away from the middle layers");
    mm->add_option("--n", n)->required();
    mm->callback([&] { action = [&] { return run_middle_mass(opt, n); }; });

    std::string fixtures = CUBETURAN_FIXTURES_DIR;
    auto* rp = app.add_subcommand("report", "Run the acceptance suite");
    rp->add_option("--fixtures", fixtures, "Fixture directory");
    rp->callback([&] { action = [&] { return run_report(opt, fixtures); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "cubeturan: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "cubeturan: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "cubeturan: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        // DomainError, ResourceLimitError and NotBipartiteError land here.
        std::cerr << "cubeturan: " << e.what() << '\n';
        return kExitUsage;
    }
}
