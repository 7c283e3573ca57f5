#include <algorithm>
#include <bit>

#include "cubeturan/errors.hpp"
#include "cubeturan/partite_rep.hpp"

namespace cubeturan {

namespace {

void check_pair(const Representation& ra, Vertex a, const Representation& rb, Vertex b, const char* op) {
    if (ra.k != rb.k) throw DomainError(std::string(op) + ": representations have different k");
    if (static_cast<int>(ra.parts.size()) != ra.k || static_cast<int>(rb.parts.size()) != rb.k) {
        throw DomainError(std::string(op) + ": each representation needs exactly k parts");
    }
    if (a < 0 || a >= static_cast<int>(ra.embedding.size())) throw DomainError(std::string(op) + ": vertex a out of range");
    if (b < 0 || b >= static_cast<int>(rb.embedding.size())) throw DomainError(std::string(op) + ": vertex b out of range");
}

// Sends the elements of `front` to 0..|front|-1 and every other element of
// [n] to offset, offset+1, ... in ascending order.
std::vector<int> relabeling(int n, std::uint32_t front, int offset) {
    std::vector<int> map(n);
    int next_front = 0;
    int next_back = offset;
    for (int e = 0; e < n; ++e) map[e] = ((front >> e) & 1U) ? next_front++ : next_back++;
    return map;
}

std::uint32_t apply(const std::vector<int>& map, std::uint32_t bits) {
    std::uint32_t out = 0;
    for (; bits != 0; bits &= bits - 1) out |= 1U << map[std::countr_zero(bits)];
    return out;
}

int part_containing(const std::vector<std::uint32_t>& parts, int element) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if ((parts[i] >> element) & 1U) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

Representation glue_top(const Representation& ra, Vertex a, const Representation& rb, Vertex b) {
    check_pair(ra, a, rb, b, "glue_top");
    if (!ra.is_top(a)) throw DomainError("glue_top: vertex a is not a top vertex");
    if (!rb.is_top(b)) throw DomainError("glue_top: vertex b is not a top vertex");
    const int n = ra.n + rb.n;
    if (n > kMaxGroundSet) throw ResourceLimitError("glue_top: combined ground set exceeds 30");

    const int shift = ra.n;
    const std::uint32_t u = ra.embedding[a].bits();
    const std::uint32_t w = rb.embedding[b].bits() << shift;
    Representation out;
    out.k = 2 * ra.k;
    out.n = n;
    for (const auto& x : ra.embedding) out.embedding.emplace_back(x.bits() | w, n);
    for (Vertex y = 0; y < static_cast<Vertex>(rb.embedding.size()); ++y) {
        if (y != b) out.embedding.emplace_back(u | (rb.embedding[y].bits() << shift), n);
    }
    for (const auto& p : ra.parts) out.parts.emplace_back(p.bits(), n);
    for (const auto& p : rb.parts) out.parts.emplace_back(p.bits() << shift, n);
    return out;
}

Representation glue_bottom(const Representation& ra, Vertex a, const Representation& rb, Vertex b) {
    check_pair(ra, a, rb, b, "glue_bottom");
    const int k = ra.k;
    if (ra.embedding[a].size() != k - 1) throw DomainError("glue_bottom: vertex a is not a bottom vertex");
    if (rb.embedding[b].size() != k - 1) throw DomainError("glue_bottom: vertex b is not a bottom vertex");
    const int n = ra.n + rb.n - (k - 1);
    if (n > kMaxGroundSet) throw ResourceLimitError("glue_bottom: combined ground set exceeds 30");

    const std::vector<int> map_a = relabeling(ra.n, ra.embedding[a].bits(), k - 1);
    const std::vector<int> map_b = relabeling(rb.n, rb.embedding[b].bits(), ra.n);

    Representation out;
    out.k = k;
    out.n = n;
    for (const auto& x : ra.embedding) out.embedding.emplace_back(apply(map_a, x.bits()), n);
    for (Vertex y = 0; y < static_cast<Vertex>(rb.embedding.size()); ++y) {
        if (y != b) out.embedding.emplace_back(apply(map_b, rb.embedding[y].bits()), n);
    }

    std::vector<std::uint32_t> parts_a, parts_b;
    for (const auto& p : ra.parts) parts_a.push_back(apply(map_a, p.bits()));
    for (const auto& p : rb.parts) parts_b.push_back(apply(map_b, p.bits()));
    // Parts sharing one of the elements 0..k-2 must merge together.
    std::vector<int> partner(parts_a.size(), -1);
    std::vector<bool> taken(parts_b.size(), false);
    for (int s = 0; s < k - 1; ++s) {
        const int i = part_containing(parts_a, s);
        const int j = part_containing(parts_b, s);
        if (i < 0 || j < 0) continue;
        if ((partner[i] != -1 && partner[i] != j) || (partner[i] == -1 && taken[j])) {
            throw DomainError("glue_bottom: shared elements sit in inconsistent parts");
        }
        partner[i] = j;
        taken[j] = true;
    }
    std::size_t next_free = 0;
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (partner[i] != -1) continue;
        while (next_free < taken.size() && taken[next_free]) ++next_free;
        partner[i] = static_cast<int>(next_free);
        taken[next_free] = true;
    }
    for (std::size_t i = 0; i < parts_a.size(); ++i) out.parts.emplace_back(parts_a[i] | parts_b[partner[i]], n);
    return out;
}

}  // namespace cubeturan
