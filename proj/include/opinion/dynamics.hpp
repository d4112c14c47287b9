#pragma once

#include <span>
#include <vector>

#include "opinion/agents.hpp"
#include "opinion/graph.hpp"
#include "opinion/params.hpp"

namespace opinion {

/// One trajectory row. `flips` counts the nodes that changed opinion
/// entering this step, so flips(t+1) equals the number of nodes with
/// negative payoff at step t, and flips(0) is 0.
struct StepMetrics {
    int step = 0;
    double prop_a = 0.0;
    double mean_payoff = 0.0;
    std::size_t flips = 0;
};

/// Net payoff of node i's current opinion against all its leaders:
///   p(i) = b * sum over agreeing leaders of   [1 + w1*t(x) + w2*e(x)]
///        - c * sum over disagreeing leaders of [1 + w1*t(x) + w2*e(x) - w3*s(i)]
/// with normalized attributes. A node with no leaders scores 0.
double payoff(NodeId i, std::span<const Opinion> opinions, const SocialGraph& g,
              const AgentAttributes& attrs, const ModelParams& params);

/// Outcome of one synchronous update. prop_a and mean_payoff describe the
/// input state (mean over all nodes; leaderless nodes contribute 0);
/// `flips` counts nodes whose payoff was negative, i.e. the changes applied
/// into `next`. Ties (p == 0) keep the current opinion.
struct StepResult {
    std::vector<Opinion> next;
    double prop_a = 0.0;
    double mean_payoff = 0.0;
    std::size_t flips = 0;
};

StepResult update_step(std::span<const Opinion> opinions, const SocialGraph& g,
                       const AgentAttributes& attrs, const ModelParams& params);

struct RunResult {
    std::vector<StepMetrics> trajectory;  // steps 0..T, T <= max_steps
    int relaxation_time = 0;              // first step of the quiet window; max_steps if none
    double final_prop_a = 0.0;
    bool converged = false;
};

/// Iterates synchronous updates until `criterion.window` consecutive quiet
/// steps occur or max_steps is hit. Non-convergence is a flagged result,
/// not an error. Fully deterministic in its inputs.
RunResult run_simulation(const SocialGraph& g, const AgentAttributes& attrs,
                         const ModelParams& params, std::vector<Opinion> initial,
                         const RelaxationCriterion& criterion);

double proportion_a(std::span<const Opinion> opinions);

}  // namespace opinion
