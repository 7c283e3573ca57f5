#include "cubeturan/turan_search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "cubeturan/copies.hpp"
#include "cubeturan/errors.hpp"

namespace cubeturan {

std::string_view to_string(ExtremalStatus status) {
    switch (status) {
        case ExtremalStatus::exact:
            return "exact";
        case ExtremalStatus::lower_bound:
            return "lower_bound";
        case ExtremalStatus::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

namespace {

// Largest subset of [0, m) containing no copy entirely.
class CopyFreeSearch {
public:
    CopyFreeSearch(int m, const std::vector<std::vector<int>>& copies, BudgetTracker& tracker)
        : m_(m), copies_(copies), tracker_(tracker), state_(m, kUndecided), copies_of_(m),
          kept_in_(copies.size(), 0), hits_(copies.size(), 0), stamp_(m, 0), undecided_(m) {
        for (std::size_t c = 0; c < copies.size(); ++c) {
            for (int e : copies[c]) copies_of_[e].push_back(static_cast<int>(c));
        }
    }

    void run() { search(0); }

    int best() const { return best_; }
    const std::vector<bool>& best_keep() const { return best_keep_; }
    bool closed() const { return !tracker_.exhausted(); }

private:
    static constexpr char kUndecided = 0;
    static constexpr char kKept = 1;
    static constexpr char kDeleted = 2;

    struct Undo {
        int edge;
        char previous;
    };

    void search(int i) {
        if (!tracker_.charge()) return;
        while (i < m_ && state_[i] != kUndecided) ++i;
        if (i == m_) {
            if (kept_ > best_) {
                best_ = kept_;
                best_keep_.assign(m_, false);
                for (int e = 0; e < m_; ++e) best_keep_[e] = state_[e] == kKept;
            }
            return;
        }
        if (kept_ + undecided_ - disjoint_packing() <= best_) return;

        const std::size_t mark = trail_.size();
        if (keep(i)) search(i + 1);
        rewind(mark);
        if (tracker_.exhausted()) return;
        remove(i);
        search(i + 1);
        rewind(mark);
    }

    // Keeps e and deletes edges forced out by nearly complete copies; false on a complete copy.
    bool keep(int e) {
        set_state(e, kKept);
        bool ok = true;
        for (int c : copies_of_[e]) {
            if (hits_[c] > 0) continue;
            const int size = static_cast<int>(copies_[c].size());
            if (kept_in_[c] == size) {
                ok = false;
            } else if (kept_in_[c] == size - 1) {
                for (int f : copies_[c]) {
                    if (state_[f] == kUndecided) {
                        remove(f);
                        break;
                    }
                }
            }
        }
        return ok;
    }

    void remove(int e) { set_state(e, kDeleted); }

    void set_state(int e, char s) {
        trail_.push_back({e, state_[e]});
        state_[e] = s;
        --undecided_;
        if (s == kKept) {
            ++kept_;
            for (int c : copies_of_[e]) ++kept_in_[c];
        } else {
            for (int c : copies_of_[e]) ++hits_[c];
        }
    }

    void rewind(std::size_t mark) {
        while (trail_.size() > mark) {
            const Undo u = trail_.back();
            trail_.pop_back();
            if (state_[u.edge] == kKept) {
                --kept_;
                for (int c : copies_of_[u.edge]) --kept_in_[c];
            } else {
                for (int c : copies_of_[u.edge]) --hits_[c];
            }
            state_[u.edge] = u.previous;
            ++undecided_;
        }
    }

    // Unhit copies pairwise disjoint on undecided edges each need their own deletion.
    int disjoint_packing() {
        ++round_;
        int count = 0;
        for (std::size_t c = 0; c < copies_.size(); ++c) {
            if (hits_[c] > 0) continue;
            bool free = true;
            for (int e : copies_[c]) {
                if (state_[e] == kUndecided && stamp_[e] == round_) {
                    free = false;
                    break;
                }
            }
            if (!free) continue;
            for (int e : copies_[c]) {
                if (state_[e] == kUndecided) stamp_[e] = round_;
            }
            ++count;
        }
        return count;
    }

    int m_;
    const std::vector<std::vector<int>>& copies_;
    BudgetTracker& tracker_;
    std::vector<char> state_;
    std::vector<std::vector<int>> copies_of_;
    std::vector<int> kept_in_;
    std::vector<int> hits_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t round_ = 0;
    std::vector<Undo> trail_;
    int kept_ = 0;
    int undecided_;
    int best_ = -1;
    std::vector<bool> best_keep_;
};

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void require_layer_graph(const Graph& g, int j) {
    if (!g.has_labels()) throw DomainError("layer graph must carry hypercube labels");
    for (const auto& label : g.labels()) {
        if (label.size() != j && label.size() != j - 1) {
            throw DomainError("vertex label " + label.to_string() + " is not in layer " + std::to_string(j));
        }
    }
}

}  // namespace

ExtremalResult extremal_number(int n, const Graph& guest, const SearchBudget& budget, const std::string& guest_id) {
    if (guest.edge_count() == 0) throw DomainError("extremal_number: guest needs at least one edge");
    budget.validate();
    const Graph host = build_hypercube(n);
    ExtremalResult out;
    out.n = n;
    out.guest_id = guest_id;

    const CopyEnumeration found = enumerate_copies(host, guest, 0, budget);
    out.nodes_explored = found.nodes_explored;
    out.copy_count = found.copies.size();
    if (found.status == SearchStatus::inconclusive) {
        out.status = ExtremalStatus::inconclusive;
        return out;
    }
    std::vector<std::vector<int>> copies;
    copies.reserve(found.copies.size());
    for (const Copy& c : found.copies) {
        std::vector<int> ids;
        for (const Edge& e : c.host_edges) ids.push_back(*host.edge_index(e.u, e.v));
        copies.push_back(std::move(ids));
    }

    BudgetTracker tracker(budget);
    CopyFreeSearch search(host.edge_count(), copies, tracker);
    search.run();
    out.nodes_explored += tracker.nodes();
    if (search.best() < 0) {
        out.status = ExtremalStatus::lower_bound;
        return out;
    }
    out.value = search.best();
    for (int e = 0; e < host.edge_count(); ++e) {
        if (search.best_keep()[e]) out.witness_edges.push_back(host.edges()[e]);
    }
    const CopyEnumeration recheck = enumerate_copies(host.edge_subgraph(out.witness_edges), guest, 1);
    if (!recheck.copies.empty()) throw std::logic_error("extremal_number: witness contains a copy of the guest");
    out.status = search.closed() ? ExtremalStatus::exact : ExtremalStatus::lower_bound;
    return out;
}

DensitySequence density_sequence(const Graph& guest, int n_from, int n_to, const SearchBudget& budget) {
    if (n_from < 1 || n_from > n_to) throw DomainError("density_sequence: need 1 <= from <= to");
    DensitySequence seq;
    for (int n = n_from; n <= n_to; ++n) {
        const ExtremalResult r = extremal_number(n, guest, budget);
        DensityPoint p;
        p.n = n;
        p.value = r.value;
        p.host_edges = static_cast<std::int64_t>(n) << (n - 1);
        p.ratio = static_cast<double>(r.value) / static_cast<double>(p.host_edges);
        p.status = r.status;
        if (!seq.points.empty()) {
            const DensityPoint& prev = seq.points.back();
            if (prev.status == ExtremalStatus::exact && p.status == ExtremalStatus::exact &&
                static_cast<std::int64_t>(p.value) * prev.host_edges > static_cast<std::int64_t>(prev.value) * p.host_edges) {
                seq.increases.push_back(n);
            }
        }
        seq.points.push_back(p);
    }
    return seq;
}

std::int64_t up_set_full_vertices(const Graph& g, const VertexSubset& x, int k) {
    if (k < 1) throw DomainError("up_set_full_vertices: k must be at least 1");
    const int j = x.size() + k;
    require_layer_graph(g, j);
    std::int64_t full = 0;
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
        const VertexSubset& label = g.label(y);
        if (label.size() != j || !x.is_subset_of(label)) continue;
        int down = 0;
        for (Vertex z : g.neighbors(y)) {
            if (x.is_subset_of(g.label(z))) ++down;
        }
        if (down == k) ++full;
    }
    return full;
}

std::int64_t StarCountReport::full_total() const {
    std::int64_t sum = 0;
    for (const auto& [_, u] : per_x_full_counts) sum += u;
    return sum;
}

StarCountReport star_count_identity(const Graph& g, int j, int k) {
    if (j < 1 || k < 1 || k > j) throw DomainError("star_count_identity: need 1 <= k <= j");
    require_layer_graph(g, j);
    const int n = *g.ground_set_size();
    if (j > n) throw DomainError("star_count_identity: layer above the ground set");
    StarCountReport report;
    report.j = j;
    report.k = k;
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
        if (g.label(y).size() == j) report.t += binomial(g.degree(y), k);
    }
    for (const VertexSubset& x : subsets_of_size(n, j - k)) report.per_x_full_counts[x] = up_set_full_vertices(g, x, k);
    return report;
}

Graph random_layer_subgraph(int n, int j, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability outside [0, 1]");
    const Graph layer = layer_subgraph(n, j);
    std::mt19937_64 rng(seed);
    std::vector<Edge> kept;
    for (const Edge& e : layer.edges()) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p) kept.push_back(e);
    }
    return layer.edge_subgraph(kept);
}

double MiddleMass::value() const {
    return numerator.convert_to<double>() / denominator.convert_to<double>();
}

std::string MiddleMass::to_string() const { return numerator.str() + "/" + denominator.str(); }

bool operator<(const MiddleMass& a, const MiddleMass& b) {
    return a.numerator * b.denominator < b.numerator * a.denominator;
}

bool operator==(const MiddleMass& a, const MiddleMass& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

MiddleMass middle_mass(int n) {
    if (n < 1) throw DomainError("middle_mass needs n >= 1");
    using boost::multiprecision::cpp_int;
    // |i - n/2| > n^{2/3}  <=>  |2i - n|^3 > 8 n^2, all in integers.
    const cpp_int bound = cpp_int(8) * n * n;
    cpp_int binom = 1;
    cpp_int sum = 0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) binom = binom * (n - i + 1) / i;
        const cpp_int gap = std::abs(2 * i - n);
        if (gap * gap * gap > bound) sum += binom;
    }
    MiddleMass m{sum, cpp_int(1) << n};
    const cpp_int g = boost::multiprecision::gcd(m.numerator, m.denominator);
    if (g > 1) {
        m.numerator /= g;
        m.denominator /= g;
    }
    return m;
}

std::vector<std::vector<int>> hypergraph_copies(const std::vector<VertexSubset>& host_edges, int n,
                                                const Hypergraph& pattern, BudgetTracker& tracker) {
    std::vector<std::uint32_t> host_bits;
    for (const auto& e : host_edges) host_bits.push_back(e.bits());
    std::vector<int> sorted_index(host_bits.size());
    for (std::size_t i = 0; i < sorted_index.size(); ++i) sorted_index[i] = static_cast<int>(i);
    std::sort(sorted_index.begin(), sorted_index.end(), [&](int a, int b) { return host_bits[a] < host_bits[b]; });
    auto lookup = [&](std::uint32_t bits) -> int {
        auto it = std::lower_bound(sorted_index.begin(), sorted_index.end(), bits,
                                   [&](int idx, std::uint32_t value) { return host_bits[idx] < value; });
        return (it != sorted_index.end() && host_bits[*it] == bits) ? *it : -1;
    };

    const std::vector<int> elements = pattern.support().indices();
    std::vector<int> position(pattern.n, -1);
    for (std::size_t i = 0; i < elements.size(); ++i) position[elements[i]] = static_cast<int>(i);
    // Pattern edges that become fully mapped once element i is placed.
    std::vector<std::vector<std::uint32_t>> closes(elements.size());
    for (const auto& e : pattern.edges) {
        int last = 0;
        for (int x : e.indices()) last = std::max(last, position[x]);
        closes[last].push_back(e.bits());
    }

    std::set<std::vector<int>> found;
    std::vector<int> image(pattern.n, -1);
    std::uint32_t used = 0;
    auto map_bits = [&](std::uint32_t bits) {
        std::uint32_t out = 0;
        for (; bits != 0; bits &= bits - 1) out |= 1U << image[std::countr_zero(bits)];
        return out;
    };
    std::function<void(std::size_t)> place = [&](std::size_t depth) {
        if (depth == elements.size()) {
            std::vector<int> ids;
            for (const auto& e : pattern.edges) ids.push_back(lookup(map_bits(e.bits())));
            std::sort(ids.begin(), ids.end());
            found.insert(std::move(ids));
            return;
        }
        for (int target = 0; target < n; ++target) {
            if ((used >> target) & 1U) continue;
            if (!tracker.charge()) return;
            image[elements[depth]] = target;
            bool ok = true;
            for (std::uint32_t e : closes[depth]) {
                if (lookup(map_bits(e)) < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used |= 1U << target;
                place(depth + 1);
                used &= ~(1U << target);
            }
            image[elements[depth]] = -1;
        }
    };
    place(0);
    return {found.begin(), found.end()};
}

HypergraphExtremalResult hypergraph_extremal(int n, int k, const Hypergraph& forbidden, const SearchBudget& budget) {
    if (forbidden.k != k) throw DomainError("hypergraph_extremal: forbidden hypergraph is not k-uniform");
    if (forbidden.edges.empty()) throw DomainError("hypergraph_extremal: forbidden hypergraph has no edges");
    if (n < 0 || n > kMaxGroundSet) throw ResourceLimitError("hypergraph_extremal: n outside [0, 30]");
    if (binomial(n, k) > 4096) throw ResourceLimitError("hypergraph_extremal: more than 4096 candidate hyperedges");
    budget.validate();

    const std::vector<VertexSubset> host = subsets_of_size(n, k);
    HypergraphExtremalResult out;
    out.n = n;
    out.k = k;
    BudgetTracker copy_tracker(budget);
    const std::vector<std::vector<int>> copies = hypergraph_copies(host, n, forbidden, copy_tracker);
    out.nodes_explored = copy_tracker.nodes();
    out.copy_count = copies.size();
    if (copy_tracker.exhausted()) {
        out.status = ExtremalStatus::inconclusive;
        return out;
    }
    BudgetTracker tracker(budget);
    CopyFreeSearch search(static_cast<int>(host.size()), copies, tracker);
    search.run();
    out.nodes_explored += tracker.nodes();
    if (search.best() < 0) {
        out.status = ExtremalStatus::lower_bound;
        return out;
    }
    out.value = search.best();
    for (std::size_t e = 0; e < host.size(); ++e) {
        if (search.best_keep()[e]) out.witness_edges.push_back(host[e]);
    }
    out.status = search.closed() ? ExtremalStatus::exact : ExtremalStatus::lower_bound;
    return out;
}

}  // namespace cubeturan
