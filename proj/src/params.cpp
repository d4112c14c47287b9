#include "opinion/params.hpp"

#include <cmath>

#include "opinion/errors.hpp"

namespace opinion {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw ValidationError(message);
}

}  // namespace

void ModelParams::validate() const {
    require(std::isfinite(b) && b > 0.0, "b must be > 0");
    require(std::isfinite(c) && c > 0.0, "c must be > 0");
    require(std::isfinite(omega1) && omega1 >= 0.0, "omega1 must be >= 0");
    require(std::isfinite(omega2) && omega2 >= 0.0, "omega2 must be >= 0");
    require(std::isfinite(omega3) && omega3 >= 0.0, "omega3 must be >= 0");
    require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
    require(std::isfinite(beta) && beta >= 0.0, "beta must be >= 0");
    // mu must be positive or rejection of non-positive expertise draws
    // would almost never terminate
    require(std::isfinite(mu) && mu > 0.0, "mu must be > 0");
    require(std::isfinite(sigma2) && sigma2 > 0.0, "sigma2 must be > 0");
}

void RelaxationCriterion::validate() const {
    require(std::isfinite(epsilon) && epsilon >= 0.0, "epsilon must be >= 0");
    require(window >= 1, "window must be >= 1");
    require(max_steps >= window, "max_steps must be >= window");
}

const char* to_string(SeedKind kind) {
    switch (kind) {
        case SeedKind::kRandom: return "random";
        case SeedKind::kTopInDegree: return "top_in_degree";
        case SeedKind::kTopExpertise: return "top_expertise";
    }
    return "random";
}

SeedKind seed_kind_from_string(std::string_view name) {
    if (name == "random") return SeedKind::kRandom;
    if (name == "top_in_degree") return SeedKind::kTopInDegree;
    if (name == "top_expertise") return SeedKind::kTopExpertise;
    throw ValidationError("unknown seeding strategy '" + std::string(name) +
                          "' (expected random, top_in_degree, or top_expertise)");
}

}  // namespace opinion
