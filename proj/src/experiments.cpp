#include "opinion/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "opinion/agents.hpp"
#include "opinion/errors.hpp"
#include "opinion/format.hpp"
#include "opinion/parallel.hpp"
#include "opinion/rng.hpp"

namespace opinion {

namespace {

double mean_of(std::span<const double> values) {
    double sum = 0.0;
    for (const double v : values) sum += v;
    return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

// Population standard deviation; a single sample has none.
double std_of(std::span<const double> values, double mean) {
    if (values.size() <= 1) return 0.0;
    double acc = 0.0;
    for (const double v : values) acc += (v - mean) * (v - mean);
    return std::sqrt(acc / static_cast<double>(values.size()));
}

void require_increasing(std::span<const double> values) {
    if (values.empty()) throw ValidationError("sweep needs at least one value");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw ValidationError("sweep values must be strictly increasing");
}

}  // namespace

ReplicationSeeds replication_seeds(std::uint64_t master_seed, std::size_t variation_index,
                                   std::size_t replication) {
    const std::uint64_t variation =
        child_seed(master_seed, stream::kVariationBase + variation_index);
    const std::uint64_t rep = child_seed(variation, replication);
    return {child_seed(rep, stream::kExpertise), child_seed(rep, stream::kSeeding)};
}

double AggregateTrajectory::prop_std_at(std::size_t step) const {
    if (std_prop_a.empty()) return 0.0;
    return std_prop_a[std::min(step, std_prop_a.size() - 1)];
}

AggregateTrajectory aggregate_runs(const std::vector<RunResult>& runs) {
    if (runs.empty()) throw ValidationError("cannot aggregate zero runs");
    std::size_t longest = 0;
    for (const auto& run : runs) longest = std::max(longest, run.trajectory.size());

    AggregateTrajectory agg;
    agg.mean_prop_a.resize(longest);
    agg.std_prop_a.resize(longest);
    agg.mean_payoff.resize(longest);
    agg.std_payoff.resize(longest);
    agg.mean_flips.resize(longest);

    std::vector<double> props(runs.size());
    std::vector<double> payoffs(runs.size());
    std::vector<double> flips(runs.size());
    for (std::size_t s = 0; s < longest; ++s) {
        for (std::size_t r = 0; r < runs.size(); ++r) {
            const auto& traj = runs[r].trajectory;
            // Shorter runs hold their final row: a converged run stays put.
            const auto& row = traj[std::min(s, traj.size() - 1)];
            props[r] = row.prop_a;
            payoffs[r] = row.mean_payoff;
            flips[r] = static_cast<double>(row.flips);
        }
        agg.mean_prop_a[s] = mean_of(props);
        agg.std_prop_a[s] = std_of(props, agg.mean_prop_a[s]);
        agg.mean_payoff[s] = mean_of(payoffs);
        agg.std_payoff[s] = std_of(payoffs, agg.mean_payoff[s]);
        agg.mean_flips[s] = mean_of(flips);
    }

    agg.relaxation_times.reserve(runs.size());
    agg.final_props.reserve(runs.size());
    std::vector<double> relax(runs.size());
    for (std::size_t r = 0; r < runs.size(); ++r) {
        agg.relaxation_times.push_back(runs[r].relaxation_time);
        agg.final_props.push_back(runs[r].final_prop_a);
        relax[r] = static_cast<double>(runs[r].relaxation_time);
        if (runs[r].converged) ++agg.converged_count;
    }
    agg.mean_relaxation = mean_of(relax);
    agg.std_relaxation = std_of(relax, agg.mean_relaxation);
    agg.mean_final_prop = mean_of(agg.final_props);
    agg.std_final_prop = std_of(agg.final_props, agg.mean_final_prop);
    return agg;
}

ReplicateResult replicate(const SocialGraph& g, const ModelParams& params,
                          const SeedingStrategy& strategy,
                          const RelaxationCriterion& criterion, const ReplicationPlan& plan) {
    if (plan.replications < 1) throw ValidationError("replications must be >= 1");
    params.validate();
    criterion.validate();
    validate_strategy(strategy, g.node_count());

    const std::uint64_t shared_expertise_seed =
        replication_seeds(plan.master_seed, plan.variation_index, 0).expertise;
    std::vector<RunResult> runs(plan.replications);
    parallel_for(plan.replications, [&](std::size_t r) {
        const ReplicationSeeds seeds = replication_seeds(plan.master_seed, plan.variation_index, r);
        const std::uint64_t expertise_seed =
            plan.resample_expertise ? seeds.expertise : shared_expertise_seed;
        const AgentAttributes attrs = build_attributes(g, params, expertise_seed);
        std::vector<Opinion> initial = assign_opinions(g, attrs, strategy, seeds.seeding);
        runs[r] = run_simulation(g, attrs, params, std::move(initial), criterion);
    });

    ReplicateResult out;
    out.aggregate = aggregate_runs(runs);
    out.runs = std::move(runs);
    return out;
}

std::vector<VariationOutcome> sweep_initial_proportion(
    const SocialGraph& g, const ModelParams& params, const SeedingStrategy& strategy,
    const RelaxationCriterion& criterion, const ReplicationPlan& base,
    std::span<const double> proportions) {
    require_increasing(proportions);
    std::vector<VariationOutcome> out;
    out.reserve(proportions.size());
    for (std::size_t vi = 0; vi < proportions.size(); ++vi) {
        SeedingStrategy varied = strategy;
        varied.fraction = proportions[vi];
        ReplicationPlan plan = base;
        plan.variation_index = base.variation_index + vi;
        out.push_back({format_exact(proportions[vi]), proportions[vi],
                       replicate(g, params, varied, criterion, plan).aggregate});
    }
    return out;
}

std::vector<VariationOutcome> sweep_bc(const SocialGraph& g, const ModelParams& params,
                                       const SeedingStrategy& strategy,
                                       const RelaxationCriterion& criterion,
                                       const ReplicationPlan& base,
                                       std::span<const double> ratios) {
    require_increasing(ratios);
    std::vector<VariationOutcome> out;
    out.reserve(ratios.size());
    for (std::size_t vi = 0; vi < ratios.size(); ++vi) {
        ModelParams varied = params;
        varied.c = 1.0;
        varied.b = ratios[vi];
        ReplicationPlan plan = base;
        plan.variation_index = base.variation_index + vi;
        out.push_back({format_exact(ratios[vi]), ratios[vi],
                       replicate(g, varied, strategy, criterion, plan).aggregate});
    }
    return out;
}

std::vector<VariationOutcome> sweep_trust_exponent(
    const SocialGraph& g, const ModelParams& params, const SeedingStrategy& strategy,
    const RelaxationCriterion& criterion, const ReplicationPlan& base,
    std::span<const double> alphas) {
    require_increasing(alphas);
    std::vector<VariationOutcome> out;
    out.reserve(alphas.size());
    for (std::size_t vi = 0; vi < alphas.size(); ++vi) {
        ModelParams varied = params;
        varied.alpha = alphas[vi];
        ReplicationPlan plan = base;
        plan.variation_index = base.variation_index + vi;
        out.push_back({format_exact(alphas[vi]), alphas[vi],
                       replicate(g, varied, strategy, criterion, plan).aggregate});
    }
    return out;
}

std::vector<VariationOutcome> sweep_expertise_variance(
    const SocialGraph& g, const ModelParams& params, const SeedingStrategy& strategy,
    const RelaxationCriterion& criterion, const ReplicationPlan& base,
    std::span<const double> sigma2s) {
    require_increasing(sigma2s);
    std::vector<VariationOutcome> out;
    out.reserve(sigma2s.size());
    for (std::size_t vi = 0; vi < sigma2s.size(); ++vi) {
        ModelParams varied = params;
        varied.sigma2 = sigma2s[vi];
        ReplicationPlan plan = base;
        plan.variation_index = base.variation_index + vi;
        out.push_back({format_exact(sigma2s[vi]), sigma2s[vi],
                       replicate(g, varied, strategy, criterion, plan).aggregate});
    }
    return out;
}

std::vector<VariationOutcome> guidance_study(const SocialGraph& g, const ModelParams& params,
                                             const SeedingStrategy& strategy,
                                             const RelaxationCriterion& criterion,
                                             const ReplicationPlan& base) {
    // All three strategies share the same seed streams (same variation index):
    // replication r differs across strategies only in the seeding rule itself,
    // which makes the comparison paired.
    const SeedKind kinds[] = {SeedKind::kRandom, SeedKind::kTopInDegree,
                              SeedKind::kTopExpertise};
    std::vector<VariationOutcome> out;
    out.reserve(3);
    for (std::size_t vi = 0; vi < 3; ++vi) {
        SeedingStrategy varied = strategy;
        varied.kind = kinds[vi];
        out.push_back({to_string(kinds[vi]), static_cast<double>(vi),
                       replicate(g, params, varied, criterion, base).aggregate});
    }
    return out;
}

std::vector<SweepRow> summarize(const std::vector<VariationOutcome>& outcomes) {
    std::vector<SweepRow> rows;
    rows.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        rows.push_back({o.label, o.value, o.aggregate.mean_relaxation,
                        o.aggregate.std_relaxation, o.aggregate.mean_final_prop,
                        o.aggregate.std_final_prop});
    }
    return rows;
}

}  // namespace opinion
