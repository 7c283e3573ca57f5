#include "cubeturan/subset.hpp"

#include <string_view>

#include "cubeturan/errors.hpp"

namespace cubeturan {

namespace {

std::uint32_t low_mask(int n) { return n >= 32 ? ~0U : ((1U << n) - 1U); }

void check_ground(int n) {
    if (n < 0 || n > kMaxGroundSet) {
        throw ResourceLimitError("ground set size " + std::to_string(n) + " outside [0, " +
                                 std::to_string(kMaxGroundSet) + "]");
    }
}

}  // namespace

VertexSubset::VertexSubset(std::uint32_t bits, int n) : bits_(bits), n_(n) {
    check_ground(n);
    if ((bits & ~low_mask(n)) != 0) {
        throw DomainError("subset bits 0x" + to_hex() + " escape ground set of size " + std::to_string(n));
    }
}

VertexSubset VertexSubset::of(std::initializer_list<int> elements, int n) {
    return from_elements(std::vector<int>(elements), n);
}

VertexSubset VertexSubset::from_elements(const std::vector<int>& elements, int n) {
    check_ground(n);
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n) {
            throw DomainError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
        }
        bits |= 1U << (e - 1);
    }
    return {bits, n};
}

VertexSubset VertexSubset::prefix(int count, int n) {
    if (count < 0 || count > n) throw DomainError("prefix size outside [0, n]");
    return {low_mask(count), n};
}

VertexSubset VertexSubset::with(int index) const {
    if (index < 0 || index >= n_) throw DomainError("element index outside ground set");
    return {bits_ | (1U << index), n_};
}

VertexSubset VertexSubset::without(int index) const {
    if (index < 0 || index >= n_) throw DomainError("element index outside ground set");
    return {bits_ & ~(1U << index), n_};
}

VertexSubset VertexSubset::widened(int n) const {
    if (n < n_) throw DomainError("cannot narrow a subset's ground set");
    return {bits_, n};
}

std::vector<int> VertexSubset::indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string VertexSubset::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (bits_ == 0) return "0";
    std::string out;
    for (std::uint32_t b = bits_; b != 0; b >>= 4) out.insert(out.begin(), kDigits[b & 0xFU]);
    return out;
}

VertexSubset VertexSubset::from_hex(const std::string& text, int n) {
    std::string_view digits = text;
    if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits.remove_prefix(2);
    if (digits.empty() || digits.size() > 8) throw DomainError("bad hex subset '" + text + "'");
    std::uint32_t bits = 0;
    for (char c : digits) {
        int value;
        if (c >= '0' && c <= '9') {
            value = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            value = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            value = c - 'A' + 10;
        } else {
            throw DomainError("bad hex subset '" + text + "'");
        }
        bits = (bits << 4) | static_cast<std::uint32_t>(value);
    }
    return {bits, n};
}

std::string VertexSubset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
        if (!first) out += ',';
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

std::vector<VertexSubset> subsets_of_size(int n, int k) {
    check_ground(n);
    std::vector<VertexSubset> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {VertexSubset(0, n)};
    // Gosper's hack walks k-subsets in increasing numeric order.
    std::uint64_t s = (1ULL << k) - 1;
    const std::uint64_t limit = 1ULL << n;
    while (s < limit) {
        out.emplace_back(static_cast<std::uint32_t>(s), n);
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

}  // namespace cubeturan
