#pragma once

#include <cstdint>

#include "bargain/geometry.hpp"

namespace bargain {

// splitmix64: the 64-bit shift-multiply generator used for every random draw
// in the library, pinned so that a (seed, n) pair reproduces bit-identical
// streams across platforms and implementations.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct ThreatSampleStats {
    std::uint64_t n = 0;
    Point mean;
    Point standard_error;  // per-coordinate sample sd / sqrt(n); zero when n = 1
};

// t(S): the expected threat outcome, the midpoint of the two corners.
Point threat_point(const CornerPair& corners);

// One draw of the threat lottery: the low bit of the next generator output
// selects right (0) or top (1).
Point sample_threat(SplitMix64& rng, const CornerPair& corners);

// n draws under a fresh splitmix64 stream seeded with `seed`; deterministic
// for fixed (corners, n, seed). Throws Error{zero_samples} when n = 0.
ThreatSampleStats simulate_threat_mean(const CornerPair& corners, std::uint64_t n,
                                       std::uint64_t seed);

} // namespace bargain
