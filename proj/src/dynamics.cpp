#include "opinion/dynamics.hpp"

#include <cmath>
#include <utility>

#include "opinion/parallel.hpp"

namespace opinion {

double payoff(NodeId i, std::span<const Opinion> opinions, const SocialGraph& g,
              const AgentAttributes& attrs, const ModelParams& params) {
    const Opinion mine = opinions[i];
    const double stubborn_relief = params.omega3 * attrs.stubborn[i];
    double agree = 0.0;
    double disagree = 0.0;
    for (const NodeId x : g.leaders(i)) {
        const double weight =
            1.0 + params.omega1 * attrs.trust[x] + params.omega2 * attrs.expertise[x];
        if (opinions[x] == mine)
            agree += weight;
        else
            disagree += weight - stubborn_relief;
    }
    return params.b * agree - params.c * disagree;
}

StepResult update_step(std::span<const Opinion> opinions, const SocialGraph& g,
                       const AgentAttributes& attrs, const ModelParams& params) {
    const std::size_t n = g.node_count();
    StepResult r;
    r.next.resize(n);
    std::vector<double> payoffs(n);
    parallel_for(n, [&](std::size_t i) {
        const auto id = static_cast<NodeId>(i);
        const double p = payoff(id, opinions, g, attrs, params);
        payoffs[i] = p;
        r.next[i] = p < 0.0 ? static_cast<Opinion>(-opinions[i]) : opinions[i];
    });

    // Reductions in index order, so results cannot depend on scheduling.
    std::size_t ups = 0;
    std::size_t flips = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += payoffs[i];
        if (opinions[i] == kOpinionA) ++ups;
        if (r.next[i] != opinions[i]) ++flips;
    }
    r.prop_a = n == 0 ? 0.0 : static_cast<double>(ups) / static_cast<double>(n);
    r.mean_payoff = n == 0 ? 0.0 : sum / static_cast<double>(n);
    r.flips = flips;
    return r;
}

RunResult run_simulation(const SocialGraph& g, const AgentAttributes& attrs,
                         const ModelParams& params, std::vector<Opinion> initial,
                         const RelaxationCriterion& criterion) {
    criterion.validate();
    RunResult out;
    std::vector<Opinion> current = std::move(initial);
    std::size_t entering_flips = 0;  // nobody changed "entering" step 0
    double prev_prop = 0.0;
    int quiet_streak = 0;
    for (int t = 0;; ++t) {
        StepResult step = update_step(current, g, attrs, params);
        out.trajectory.push_back({t, step.prop_a, step.mean_payoff, entering_flips});
        if (t >= 1) {
            const bool quiet = criterion.epsilon == 0.0
                                   ? entering_flips == 0
                                   : std::abs(step.prop_a - prev_prop) <= criterion.epsilon;
            quiet_streak = quiet ? quiet_streak + 1 : 0;
            if (quiet_streak >= criterion.window) {
                out.relaxation_time = t - criterion.window + 1;
                out.converged = true;
                break;
            }
        }
        if (t >= criterion.max_steps) {
            out.relaxation_time = criterion.max_steps;
            out.converged = false;
            break;
        }
        prev_prop = step.prop_a;
        entering_flips = step.flips;
        current = std::move(step.next);
    }
    out.final_prop_a = out.trajectory.back().prop_a;
    return out;
}

double proportion_a(std::span<const Opinion> opinions) {
    if (opinions.empty()) return 0.0;
    std::size_t ups = 0;
    for (const Opinion o : opinions)
        if (o == kOpinionA) ++ups;
    return static_cast<double>(ups) / static_cast<double>(opinions.size());
}

}  // namespace opinion
