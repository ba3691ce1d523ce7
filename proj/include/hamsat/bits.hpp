#ifndef HAMSAT_BITS_HPP
#define HAMSAT_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace hamsat {

// Vertex and edge sets are one machine word each; everything mask-based in
// this library is therefore limited to 64 vertices / 64 edges.
using VertexSet = std::uint64_t;
using EdgeSet = std::uint64_t;

inline constexpr int kMaxWordBits = 64;

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

constexpr bool has_bit(std::uint64_t mask, int i) { return (mask >> i) & 1u; }

constexpr int popcount(std::uint64_t mask) { return std::popcount(mask); }

// All masks with exactly `bits` low bits set; bits == 64 yields all ones.
constexpr std::uint64_t low_mask(int bits) {
    return bits >= kMaxWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline std::vector<int> bit_indices(std::uint64_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace hamsat

#endif  // HAMSAT_BITS_HPP
