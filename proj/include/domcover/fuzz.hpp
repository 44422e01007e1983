#pragma once

#include <cstdint>
#include <vector>

#include "domcover/colored.hpp"
#include "domcover/rng.hpp"

namespace domcover {

/// Seeded random 2-coloring over palette {R, B}: one RNG bit per ordered
/// pair, loops included, row-major order.
inline ColoredCompleteDigraph random_two_coloring(int n, BitStream& bits) {
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n);
    for (auto& c : colors) c = bits.next_bit() ? 1 : 0;
    return ColoredCompleteDigraph(n, {'R', 'B'}, std::move(colors));
}

inline ColoredCompleteDigraph random_two_coloring(int n, std::uint64_t seed) {
    BitStream bits(seed);
    return random_two_coloring(n, bits);
}

/// Fuzz case i of a run with base seed s draws from SplitMix64(s + i):
/// one word for the order (uniform in 0..max_n), then color bits.
inline ColoredCompleteDigraph fuzz_coloring(std::uint64_t seed, int case_index, int max_n) {
    SplitMix64 gen(seed + static_cast<std::uint64_t>(case_index));
    const int n = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(max_n) + 1));
    BitStream bits(gen);
    return random_two_coloring(n, bits);
}

}  // namespace domcover
