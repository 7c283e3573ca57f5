#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cubeturan {

/// Largest supported ground set; subsets of [n] fit in one 32-bit word.
inline constexpr int kMaxGroundSet = 30;

/// A subset of the ground set [n]. Element i (1-based) is bit i-1.
///
/// Ordering and equality look at the bits only, so subsets of different
/// ground sets compare by content. All canonical orders in the library are
/// ascending bit values.
class VertexSubset {
public:
    constexpr VertexSubset() = default;

    /// Throws DomainError when n is outside [0, kMaxGroundSet] or bits escape [n].
    VertexSubset(std::uint32_t bits, int n);

    /// Builds a subset from 1-based element numbers.
    static VertexSubset of(std::initializer_list<int> elements, int n);
    static VertexSubset from_elements(const std::vector<int>& elements, int n);
    /// The set {1, ..., count}.
    static VertexSubset prefix(int count, int n);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int ground_size() const { return n_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    /// Zero-based element test.
    constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }
    constexpr bool is_subset_of(const VertexSubset& other) const { return (bits_ & ~other.bits_) == 0; }

    VertexSubset with(int index) const;
    VertexSubset without(int index) const;
    /// Same bits on a larger (or equal) ground set.
    VertexSubset widened(int n) const;

    /// Zero-based member indices in ascending order.
    std::vector<int> indices() const;

    /// Lowercase hex without prefix, "0" for the empty set.
    std::string to_hex() const;
    /// Accepts an optional 0x prefix. Throws DomainError on bad digits or escaped bits.
    static VertexSubset from_hex(const std::string& text, int n);

    /// "{1,3,4}" with 1-based elements.
    std::string to_string() const;

    friend constexpr bool operator==(const VertexSubset& a, const VertexSubset& b) { return a.bits_ == b.bits_; }
    friend constexpr std::strong_ordering operator<=>(const VertexSubset& a, const VertexSubset& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint32_t bits_ = 0;
    int n_ = 0;
};

/// Number of positions where two subsets differ.
inline int hamming_distance(const VertexSubset& a, const VertexSubset& b) {
    return std::popcount(a.bits() ^ b.bits());
}

/// True when the two subsets are adjacent in a hypercube.
inline bool cube_adjacent(const VertexSubset& a, const VertexSubset& b) {
    return hamming_distance(a, b) == 1;
}

/// All k-element subsets of [n] in ascending bit order.
std::vector<VertexSubset> subsets_of_size(int n, int k);

}  // namespace cubeturan
