#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "opinion/graph.hpp"
#include "opinion/params.hpp"

namespace opinion {

using Opinion = std::int8_t;
inline constexpr Opinion kOpinionA = +1;
inline constexpr Opinion kOpinionB = -1;

/// Per-node attributes, raw and min-max normalized to [0,1]. The normalized
/// columns are the ones the payoff uses; normalization runs once over the
/// whole population per setup.
struct AgentAttributes {
    std::vector<double> expertise_raw;  // e(i) ~ N(mu, sigma2)
    std::vector<double> trust_raw;      // t(i) = k_i^alpha
    std::vector<double> stubborn_raw;   // s(i) = beta * e(i)
    std::vector<double> expertise;
    std::vector<double> trust;
    std::vector<double> stubborn;
};

/// I.i.d. draws from N(mu, sigma2); non-positive draws are resampled.
std::vector<double> sample_expertise(std::size_t n, const ModelParams& params,
                                     std::uint64_t seed);

/// t(i) = k_i^alpha; zero followers give zero trust.
std::vector<double> compute_trust(const SocialGraph& g, const ModelParams& params);

/// Min-max to [0,1]; a constant vector maps to all zeros. Throws
/// ValidationError on non-finite input.
std::vector<double> normalize(std::span<const double> values);

/// Samples expertise, derives trust and stubbornness, normalizes all three.
AgentAttributes build_attributes(const SocialGraph& g, const ModelParams& params,
                                 std::uint64_t expertise_seed);

/// round(fraction * n): how many nodes start with opinion A.
std::size_t seeded_count(double fraction, std::size_t n);

/// Checks fraction range and, for top-K kinds, K <= round(fraction * N).
/// Throws ValidationError; used to fail fast before any run starts.
void validate_strategy(const SeedingStrategy& strategy, std::size_t node_count);

/// Assigns exactly seeded_count(f, N) nodes opinion A. Top-K variants seed
/// the K top nodes (ties by ascending id) and draw the remainder uniformly
/// from the non-leaders. Throws ValidationError on a bad fraction or
/// K > round(f*N).
std::vector<Opinion> assign_opinions(const SocialGraph& g, const AgentAttributes& attrs,
                                     const SeedingStrategy& strategy, std::uint64_t seed);

}  // namespace opinion
