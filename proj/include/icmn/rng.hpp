// Seed mixing and platform-stable uniform draws. std distributions are
// implementation-defined, so all sampling goes through these helpers to keep
// outputs byte-identical for a given seed.
#pragma once

#include <cstdint>
#include <random>

namespace icmn {

// SplitMix64 finalizer.
inline std::uint64_t scramble64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream id for (seed, index); used to give each Monte Carlo
// trial or replay start its own generator.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return scramble64(scramble64(seed) ^ scramble64(index + 0x632BE59BD9B4E019ULL));
}

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound); bound >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

}  // namespace icmn
