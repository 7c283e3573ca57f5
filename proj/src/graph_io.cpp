#include "cubeturan/graph_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <optional>
#include <sstream>

#include "cubeturan/errors.hpp"

namespace cubeturan {

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

long long parse_int(const Token& t, std::size_t line) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument(t.text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
    }
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long vertex_count = -1;
    std::optional<int> ground;
    std::vector<std::pair<Edge, std::size_t>> edges;
    std::vector<std::pair<long long, std::pair<std::string, std::pair<std::size_t, std::size_t>>>> raw_labels;
    Marks marks;

    auto require_header = [&](const Token& t) {
        if (vertex_count < 0) throw ParseError(line_no, t.column, "'p <vertex_count>' must come first");
    };
    auto vertex_arg = [&](const Token& t) {
        const long long v = parse_int(t, line_no);
        if (v < 0 || v >= vertex_count) throw ParseError(line_no, t.column, "vertex " + t.text + " out of range");
        return static_cast<Vertex>(v);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text[0] == '#') continue;
        const std::string& head = tokens[0].text;
        if (head == "p") {
            if (vertex_count >= 0) throw ParseError(line_no, tokens[0].column, "duplicate 'p' line");
            if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected 'p <vertex_count>'");
            vertex_count = parse_int(tokens[1], line_no);
            if (vertex_count < 0 || vertex_count > (1LL << kMaxGroundSet)) {
                throw ParseError(line_no, tokens[1].column, "vertex count out of range");
            }
        } else if (head == "g") {
            require_header(tokens[0]);
            if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected 'g <ground_set_size>'");
            const long long g = parse_int(tokens[1], line_no);
            if (g < 0 || g > kMaxGroundSet) throw ParseError(line_no, tokens[1].column, "ground set size out of range");
            ground = static_cast<int>(g);
        } else if (head == "l") {
            require_header(tokens[0]);
            if (tokens.size() != 3) throw ParseError(line_no, tokens[0].column, "expected 'l <vertex> <hex>'");
            raw_labels.push_back({vertex_arg(tokens[1]), {tokens[2].text, {line_no, tokens[2].column}}});
        } else if (head == "m") {
            require_header(tokens[0]);
            if (tokens.size() < 2) throw ParseError(line_no, tokens[0].column, "expected 'm <role> <vertex>...'");
            auto& list = marks[tokens[1].text];
            for (std::size_t i = 2; i < tokens.size(); ++i) list.push_back(vertex_arg(tokens[i]));
        } else {
            require_header(tokens[0]);
            if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected '<u> <v>'");
            const Vertex u = vertex_arg(tokens[0]);
            const Vertex v = vertex_arg(tokens[1]);
            if (u == v) throw ParseError(line_no, tokens[1].column, "self-loop");
            edges.push_back({Edge(u, v), line_no});
        }
    }
    if (vertex_count < 0) throw ParseError(line_no + 1, 1, "missing 'p <vertex_count>' line");

    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].first == edges[i - 1].first) throw ParseError(edges[i].second, 1, "duplicate edge");
    }
    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (const auto& [e, _] : edges) plain.push_back(e);

    ParsedGraph out;
    out.marks = std::move(marks);
    if (raw_labels.empty()) {
        out.graph = Graph(static_cast<int>(vertex_count), std::move(plain));
        return out;
    }
    if (static_cast<long long>(raw_labels.size()) != vertex_count) {
        throw ParseError(line_no, 1, "labeled graphs need one 'l' line per vertex");
    }
    std::vector<std::optional<VertexSubset>> labels(vertex_count);
    std::uint32_t all_bits = 0;
    for (const auto& [v, entry] : raw_labels) {
        const auto& [text, pos] = entry;
        try {
            labels[v] = VertexSubset::from_hex(text, kMaxGroundSet);
        } catch (const DomainError& e) {
            throw ParseError(pos.first, pos.second, e.what());
        }
        all_bits |= labels[v]->bits();
    }
    const int inferred = all_bits == 0 ? 0 : 32 - std::countl_zero(all_bits);
    const int n = ground.value_or(inferred);
    if (n < inferred) throw ParseError(line_no, 1, "labels escape the declared ground set");
    std::vector<VertexSubset> final_labels;
    for (long long v = 0; v < vertex_count; ++v) {
        if (!labels[v]) throw ParseError(line_no, 1, "vertex " + std::to_string(v) + " has no label");
        final_labels.emplace_back(labels[v]->bits(), n);
    }
    try {
        out.graph = Graph(std::move(final_labels), std::move(plain), n);
    } catch (const DomainError& e) {
        throw ParseError(line_no, 1, e.what());
    }
    return out;
}

ParsedGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const Marks& marks) {
    out << "p " << g.vertex_count() << '\n';
    if (g.has_labels()) out << "g " << *g.ground_set_size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    if (g.has_labels()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) out << "l " << v << ' ' << g.label(v).to_hex() << '\n';
    }
    for (const auto& [role, vertices] : marks) {
        out << "m " << role;
        for (Vertex v : vertices) out << ' ' << v;
        out << '\n';
    }
}

std::string graph_to_string(const Graph& g, const Marks& marks) {
    std::ostringstream out;
    write_graph(out, g, marks);
    return out.str();
}

}  // namespace cubeturan
