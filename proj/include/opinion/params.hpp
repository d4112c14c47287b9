#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace opinion {

/// Model coefficients. b rewards agreeing with a leader, c prices
/// disagreement; omega1/omega2 scale a leader's trustworthiness and
/// expertise inside the payoff brackets, omega3 scales how much the
/// recipient's stubbornness discounts the disagreement cost. alpha is the
/// trust exponent (t = k^alpha), beta the stubbornness coefficient
/// (s = beta * e), and expertise is drawn from N(mu, sigma2).
struct ModelParams {
    double b = 1.0;
    double c = 1.0;
    double omega1 = 1.0;
    double omega2 = 1.0;
    double omega3 = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    double mu = 10.0;
    double sigma2 = 0.25;

    /// Throws ValidationError naming the offending field.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

enum class SeedKind { kRandom, kTopInDegree, kTopExpertise };

const char* to_string(SeedKind kind);
SeedKind seed_kind_from_string(std::string_view name);

/// How initial opinion-A holders are picked. Top-K variants seed the K
/// strongest nodes first and fill the rest of the fraction at random.
struct SeedingStrategy {
    SeedKind kind = SeedKind::kRandom;
    double fraction = 0.55;
    std::size_t leader_count = 500;

    bool operator==(const SeedingStrategy&) const = default;
};

/// A run is relaxed once `window` consecutive quiet steps occur. With
/// epsilon == 0 a step is quiet when no node flipped entering it; with
/// epsilon > 0 when |prop_A(t) - prop_A(t-1)| <= epsilon, which tolerates
/// the micro-oscillations cyclic graphs can sustain.
struct RelaxationCriterion {
    double epsilon = 0.0;
    int window = 10;
    int max_steps = 500;

    void validate() const;

    bool operator==(const RelaxationCriterion&) const = default;
};

}  // namespace opinion
