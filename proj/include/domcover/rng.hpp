#pragma once

#include <cstdint>

namespace domcover {

/// splitmix64: seedable, splittable, bit-exact across platforms.
/// All randomized constructions in this project draw from it so that a
/// (seed, consumption-order) pair pins the output exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Integer uniform in [0, bound) by 64-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

/// Bit-at-a-time view of a SplitMix64 stream, LSB first within each word.
class BitStream {
public:
    explicit BitStream(SplitMix64 gen) : gen_(gen) {}
    explicit BitStream(std::uint64_t seed) : gen_(seed) {}

    bool next_bit() {
        if (remaining_ == 0) {
            buffer_ = gen_.next();
            remaining_ = 64;
        }
        bool b = buffer_ & 1;
        buffer_ >>= 1;
        --remaining_;
        return b;
    }

private:
    SplitMix64 gen_;
    std::uint64_t buffer_ = 0;
    int remaining_ = 0;
};

}  // namespace domcover
