#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace opinion {

/// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stable child-seed derivation. child_seed(master, s) depends only on its
/// arguments, so growing a replication set or reordering parallel work never
/// shifts any stream that already existed.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master ^ mix64(stream));
}

// Fixed stream tags. Replication r of variation v draws from
//   child_seed(child_seed(master, kVariationBase + v), r)
// and splits that into per-purpose streams below.
namespace stream {
inline constexpr std::uint64_t kGraph = 1;
inline constexpr std::uint64_t kExpertise = 2;
inline constexpr std::uint64_t kSeeding = 3;
inline constexpr std::uint64_t kVariationBase = 1000;
}  // namespace stream

// mt19937_64 is fully specified by the standard; the transforms below avoid
// std::*_distribution, whose output is implementation-defined.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1), 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps the
/// distribution exactly uniform.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

/// One N(mu, sigma^2) draw via Box-Muller (cosine branch).
inline double normal(Rng& rng, double mu, double sigma) {
    double u1;
    do {
        u1 = uniform01(rng);
    } while (u1 <= 0.0);
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace opinion
