#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "opinion/dynamics.hpp"

namespace opinion {

struct ReplicationPlan {
    std::size_t replications = 100;
    std::uint64_t master_seed = 1;
    std::size_t variation_index = 0;  // position of this point within a sweep
    bool resample_expertise = true;   // false reuses replication 0's expertise
};

/// Seeds for one replication, derived only from (master, variation, r) so
/// parallel execution order and the total replication count cannot matter.
struct ReplicationSeeds {
    std::uint64_t expertise;
    std::uint64_t seeding;
};
ReplicationSeeds replication_seeds(std::uint64_t master_seed, std::size_t variation_index,
                                   std::size_t replication);

/// Cross-replication aggregate. Per-step arrays are padded to the longest
/// run by holding each run's final value, so the last entries equal the
/// statistics of the per-run final values. Stds are population stds
/// (zero for a single replication).
struct AggregateTrajectory {
    std::vector<double> mean_prop_a;
    std::vector<double> std_prop_a;
    std::vector<double> mean_payoff;
    std::vector<double> std_payoff;
    std::vector<double> mean_flips;
    std::vector<int> relaxation_times;  // one per replication
    std::vector<double> final_props;
    std::size_t converged_count = 0;
    double mean_relaxation = 0.0;
    double std_relaxation = 0.0;
    double mean_final_prop = 0.0;
    double std_final_prop = 0.0;

    std::size_t replications() const { return final_props.size(); }
    /// Padded lookup: steps past the recorded end hold the final value.
    double prop_std_at(std::size_t step) const;
};

AggregateTrajectory aggregate_runs(const std::vector<RunResult>& runs);

struct ReplicateResult {
    AggregateTrajectory aggregate;
    std::vector<RunResult> runs;  // kept for audits and per-run checks
};

/// R independent runs on a fixed graph: expertise resampled (unless the plan
/// says otherwise) and opinions reseeded per replication, executed in
/// parallel, reduced by replication index.
ReplicateResult replicate(const SocialGraph& g, const ModelParams& params,
                          const SeedingStrategy& strategy,
                          const RelaxationCriterion& criterion,
                          const ReplicationPlan& plan);

/// One sweep point: a value (or named strategy) and its aggregate.
struct VariationOutcome {
    std::string label;
    double value = 0.0;
    AggregateTrajectory aggregate;
};

std::vector<VariationOutcome> sweep_initial_proportion(
    const SocialGraph& g, const ModelParams& params, const SeedingStrategy& strategy,
    const RelaxationCriterion& criterion, const ReplicationPlan& base,
    std::span<const double> proportions);

/// Fixes c = 1 and sets b to each ratio.
std::vector<VariationOutcome> sweep_bc(const SocialGraph& g, const ModelParams& params,
                                       const SeedingStrategy& strategy,
                                       const RelaxationCriterion& criterion,
                                       const ReplicationPlan& base,
                                       std::span<const double> ratios);

std::vector<VariationOutcome> sweep_trust_exponent(
    const SocialGraph& g, const ModelParams& params, const SeedingStrategy& strategy,
    const RelaxationCriterion& criterion, const ReplicationPlan& base,
    std::span<const double> alphas);

std::vector<VariationOutcome> sweep_expertise_variance(
    const SocialGraph& g, const ModelParams& params, const SeedingStrategy& strategy,
    const RelaxationCriterion& criterion, const ReplicationPlan& base,
    std::span<const double> sigma2s);

/// Random vs top-in-degree vs top-expertise seeding, all else equal.
std::vector<VariationOutcome> guidance_study(const SocialGraph& g,
                                             const ModelParams& params,
                                             const SeedingStrategy& strategy,
                                             const RelaxationCriterion& criterion,
                                             const ReplicationPlan& base);

struct SweepRow {
    std::string label;
    double value = 0.0;
    double mean_relaxation = 0.0;
    double std_relaxation = 0.0;
    double mean_final_prop = 0.0;
    double std_final_prop = 0.0;
};

std::vector<SweepRow> summarize(const std::vector<VariationOutcome>& outcomes);

}  // namespace opinion
