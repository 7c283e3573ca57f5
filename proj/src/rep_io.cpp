#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cubeturan/errors.hpp"
#include "cubeturan/partite_rep.hpp"

namespace cubeturan {

void write_representation(std::ostream& out, const Representation& r) {
    out << "rep k=" << r.k << " n=" << r.n << '\n';
    for (std::size_t v = 0; v < r.embedding.size(); ++v) out << "v " << v << ' ' << r.embedding[v].to_hex() << '\n';
    for (std::size_t i = 0; i < r.parts.size(); ++i) out << "part " << i << ' ' << r.parts[i].to_hex() << '\n';
}

std::string representation_to_string(const Representation& r) {
    std::ostringstream out;
    write_representation(out, r);
    return out.str();
}

namespace {

int parse_number(const std::string& text, std::size_t line, std::size_t column) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used == text.size() && value >= 0) return value;
    } catch (const std::exception&) {
    }
    throw ParseError(line, column, "expected a non-negative integer, got '" + text + "'");
}

int parse_keyed(const std::string& token, const std::string& key, std::size_t line, std::size_t column) {
    if (token.rfind(key + "=", 0) != 0) throw ParseError(line, column, "expected '" + key + "=<value>'");
    return parse_number(token.substr(key.size() + 1), line, column + key.size() + 1);
}

}  // namespace

Representation parse_representation(std::istream& in) {
    Representation r;
    bool header = false;
    std::map<int, VertexSubset> vertices;
    std::map<int, VertexSubset> parts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::pair<std::string, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.emplace_back(line.substr(start, i - start), start + 1);
        }
        if (tokens.empty() || tokens[0].first[0] == '#') continue;
        const std::string& head = tokens[0].first;
        if (head == "rep") {
            if (header) throw ParseError(line_no, 1, "duplicate 'rep' header");
            if (tokens.size() != 3) throw ParseError(line_no, 1, "expected 'rep k=<k> n=<n>'");
            r.k = parse_keyed(tokens[1].first, "k", line_no, tokens[1].second);
            r.n = parse_keyed(tokens[2].first, "n", line_no, tokens[2].second);
            if (r.n > kMaxGroundSet) throw ParseError(line_no, tokens[2].second, "n above 30");
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, 1, "'rep k=<k> n=<n>' must come first");
        if (head != "v" && head != "part") throw ParseError(line_no, 1, "unknown line type '" + head + "'");
        if (tokens.size() != 3) throw ParseError(line_no, 1, "expected '" + head + " <index> <subset-as-hex>'");
        const int index = parse_number(tokens[1].first, line_no, tokens[1].second);
        VertexSubset subset;
        try {
            subset = VertexSubset::from_hex(tokens[2].first, r.n);
        } catch (const std::exception& e) {
            throw ParseError(line_no, tokens[2].second, e.what());
        }
        auto& target = head == "v" ? vertices : parts;
        if (!target.emplace(index, subset).second) throw ParseError(line_no, tokens[1].second, "duplicate index");
    }
    if (!header) throw ParseError(line_no + 1, 1, "missing 'rep k=<k> n=<n>' header");
    int expected = 0;
    for (const auto& [index, subset] : vertices) {
        if (index != expected++) throw ParseError(line_no, 1, "vertex indices must run 0..V-1 without gaps");
        r.embedding.push_back(subset);
    }
    expected = 0;
    for (const auto& [index, subset] : parts) {
        if (index != expected++) throw ParseError(line_no, 1, "part indices must run 0..k-1 without gaps");
        r.parts.push_back(subset);
    }
    return r;
}

Representation parse_representation_string(const std::string& text) {
    std::istringstream in(text);
    return parse_representation(in);
}

Representation read_representation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_representation(in);
}

}  // namespace cubeturan
