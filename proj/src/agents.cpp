#include "opinion/agents.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "opinion/errors.hpp"
#include "opinion/rng.hpp"

namespace opinion {

std::vector<double> sample_expertise(std::size_t n, const ModelParams& params,
                                     std::uint64_t seed) {
    Rng rng(seed);
    const double sigma = std::sqrt(params.sigma2);
    std::vector<double> out(n);
    for (auto& v : out) {
        do {
            v = normal(rng, params.mu, sigma);
        } while (v <= 0.0);
    }
    return out;
}

std::vector<double> compute_trust(const SocialGraph& g, const ModelParams& params) {
    std::vector<double> out(g.node_count());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto k = static_cast<double>(g.in_degree(static_cast<NodeId>(i)));
        out[i] = k == 0.0 ? 0.0 : std::pow(k, params.alpha);
    }
    return out;
}

std::vector<double> normalize(std::span<const double> values) {
    if (values.empty()) throw ValidationError("normalize needs at least one value");
    for (const double v : values)
        if (!std::isfinite(v)) throw ValidationError("normalize: non-finite input");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    std::vector<double> out(values.size(), 0.0);
    const double range = *hi - *lo;
    if (range == 0.0) return out;  // constant column carries no signal
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (values[i] - *lo) / range;
    return out;
}

AgentAttributes build_attributes(const SocialGraph& g, const ModelParams& params,
                                 std::uint64_t expertise_seed) {
    AgentAttributes attrs;
    attrs.expertise_raw = sample_expertise(g.node_count(), params, expertise_seed);
    attrs.trust_raw = compute_trust(g, params);
    attrs.stubborn_raw.resize(attrs.expertise_raw.size());
    for (std::size_t i = 0; i < attrs.stubborn_raw.size(); ++i)
        attrs.stubborn_raw[i] = params.beta * attrs.expertise_raw[i];
    attrs.expertise = normalize(attrs.expertise_raw);
    attrs.trust = normalize(attrs.trust_raw);
    attrs.stubborn = normalize(attrs.stubborn_raw);
    return attrs;
}

std::size_t seeded_count(double fraction, std::size_t n) {
    return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
}

void validate_strategy(const SeedingStrategy& strategy, std::size_t node_count) {
    if (!(strategy.fraction > 0.0) || !(strategy.fraction < 1.0))
        throw ValidationError("fraction must lie strictly between 0 and 1");
    if (strategy.kind != SeedKind::kRandom) {
        const std::size_t seeds = seeded_count(strategy.fraction, node_count);
        if (strategy.leader_count > seeds)
            throw ValidationError("leader_count " + std::to_string(strategy.leader_count) +
                                  " exceeds the seeded count round(fraction * N) = " +
                                  std::to_string(seeds));
    }
}

std::vector<Opinion> assign_opinions(const SocialGraph& g, const AgentAttributes& attrs,
                                     const SeedingStrategy& strategy, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    validate_strategy(strategy, n);
    const std::size_t seeds = seeded_count(strategy.fraction, n);
    std::vector<Opinion> opinions(n, kOpinionB);
    Rng rng(seed);

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});

    std::size_t fixed = 0;  // how many fall to the top-K rule before the random fill
    if (strategy.kind == SeedKind::kTopInDegree) {
        fixed = strategy.leader_count;
        std::sort(order.begin(), order.end(), [&g](NodeId a, NodeId b) {
            const auto ka = g.in_degree(a), kb = g.in_degree(b);
            return ka != kb ? ka > kb : a < b;
        });
    } else if (strategy.kind == SeedKind::kTopExpertise) {
        if (attrs.expertise_raw.size() != n)
            throw ValidationError("top_expertise seeding needs expertise for every node");
        fixed = strategy.leader_count;
        std::sort(order.begin(), order.end(), [&attrs](NodeId a, NodeId b) {
            const double ea = attrs.expertise_raw[a], eb = attrs.expertise_raw[b];
            return ea != eb ? ea > eb : a < b;
        });
    }

    for (std::size_t j = 0; j < fixed; ++j) opinions[order[j]] = kOpinionA;
    // Uniform draw without replacement from the rest: partial Fisher-Yates.
    for (std::size_t j = fixed; j < seeds; ++j) {
        const std::size_t pick = j + uniform_below(rng, n - j);
        std::swap(order[j], order[pick]);
        opinions[order[j]] = kOpinionA;
    }
    return opinions;
}

}  // namespace opinion
