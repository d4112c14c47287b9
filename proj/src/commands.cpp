#include "opinion/commands.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opinion/agents.hpp"
#include "opinion/errors.hpp"
#include "opinion/experiments.hpp"
#include "opinion/output.hpp"
#include "opinion/rng.hpp"
#include "opinion/stats.hpp"

namespace opinion::commands {

namespace {

namespace fs = std::filesystem;

LoadedGraph acquire_graph(const RunConfig& cfg) {
    if (cfg.graph_source == "generate") {
        LoadedGraph out;
        out.graph = generate_scale_free(cfg.graph_nodes, cfg.graph_edges_per_node,
                                        child_seed(cfg.master_seed, stream::kGraph));
        return out;
    }
    std::ifstream in(cfg.graph_source);
    if (!in) throw IoError("cannot open graph file " + cfg.graph_source);
    return load_edge_list(in);
}

void write_common(const fs::path& dir, const RunConfig& cfg, const SocialGraph& g) {
    write_text_file(dir / "config.ini", serialize_config(cfg, /*include_output_dir=*/false));
    write_text_file(dir / "manifest.txt", render_manifest(cfg, g));
}

std::string load_warnings(const RunConfig& cfg, const LoadedGraph& loaded) {
    if (cfg.graph_source == "generate") return {};
    const std::vector<std::pair<std::string, std::string>> entries = {
        {"self_loops_dropped", std::to_string(loaded.self_loops_dropped)},
        {"duplicate_edges_collapsed", std::to_string(loaded.duplicate_edges_collapsed)},
    };
    return render_key_values(entries);
}

ReplicationPlan plan_from(const RunConfig& cfg) {
    ReplicationPlan plan;
    plan.replications = cfg.replications;
    plan.master_seed = cfg.master_seed;
    plan.variation_index = 0;
    plan.resample_expertise = cfg.resample_expertise;
    return plan;
}

}  // namespace

void run_stats(const RunConfig& cfg) {
    validate(cfg);
    const fs::path dir = cfg.output_dir;
    ensure_output_dir(dir);
    const LoadedGraph loaded = acquire_graph(cfg);
    const GraphStats stats = compute_stats(loaded.graph);
    write_text_file(dir / "stats.txt", render_stats_summary(stats) + load_warnings(cfg, loaded));
    write_text_file(dir / "in_degree_histogram.tsv", render_histogram(stats.in_degree_histogram));
    write_text_file(dir / "id_map.tsv", render_id_map(loaded.graph));
    write_common(dir, cfg, loaded.graph);
}

void run_prune(const RunConfig& cfg) {
    validate(cfg);
    const fs::path dir = cfg.output_dir;
    ensure_output_dir(dir);
    const LoadedGraph loaded = acquire_graph(cfg);
    const PruneResult pruned = prune_leaves(loaded.graph, cfg.prune_threshold);
    const std::vector<std::pair<std::string, std::string>> summary = {
        {"degree_threshold", std::to_string(cfg.prune_threshold)},
        {"nodes_before", std::to_string(loaded.graph.node_count())},
        {"edges_before", std::to_string(loaded.graph.edge_count())},
        {"nodes_after", std::to_string(pruned.graph.node_count())},
        {"edges_after", std::to_string(pruned.graph.edge_count())},
        {"rounds", std::to_string(pruned.rounds)},
        {"nodes_removed", std::to_string(pruned.nodes_removed)},
    };
    write_text_file(dir / "summary.txt", render_key_values(summary) + load_warnings(cfg, loaded));
    write_text_file(dir / "pruned_edges.tsv", render_edge_list(pruned.graph));
    write_text_file(dir / "id_map.tsv", render_id_map(pruned.graph));
    write_common(dir, cfg, pruned.graph);
}

void run_generate(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.graph_source != "generate")
        throw ValidationError("the generate subcommand requires source=generate");
    const fs::path dir = cfg.output_dir;
    ensure_output_dir(dir);
    const LoadedGraph loaded = acquire_graph(cfg);
    const std::vector<std::pair<std::string, std::string>> summary = {
        {"nodes", std::to_string(loaded.graph.node_count())},
        {"edges", std::to_string(loaded.graph.edge_count())},
        {"edges_per_node", std::to_string(cfg.graph_edges_per_node)},
    };
    write_text_file(dir / "summary.txt", render_key_values(summary));
    write_text_file(dir / "edges.tsv", render_edge_list(loaded.graph));
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t i = 0; i < loaded.graph.node_count(); ++i)
        ++histogram[loaded.graph.in_degree(static_cast<NodeId>(i))];
    write_text_file(dir / "in_degree_histogram.tsv", render_histogram(histogram));
    write_common(dir, cfg, loaded.graph);
}

void run_simulate(const RunConfig& cfg) {
    validate(cfg);
    const fs::path dir = cfg.output_dir;
    ensure_output_dir(dir);
    const LoadedGraph loaded = acquire_graph(cfg);
    validate_strategy(cfg.seeding, loaded.graph.node_count());
    const ReplicateResult result =
        replicate(loaded.graph, cfg.params, cfg.seeding, cfg.relaxation, plan_from(cfg));

    std::vector<std::pair<std::string, std::string>> summary = {
        {"replications", std::to_string(result.aggregate.replications())},
        {"converged_count", std::to_string(result.aggregate.converged_count)},
        {"mean_relaxation", format_g6(result.aggregate.mean_relaxation)},
        {"std_relaxation", format_g6(result.aggregate.std_relaxation)},
        {"mean_final_prop_A", format_g6(result.aggregate.mean_final_prop)},
        {"std_final_prop_A", format_g6(result.aggregate.std_final_prop)},
    };
    if (result.runs.size() == 1) {
        const RunResult& run = result.runs.front();
        summary.push_back({"relaxation_time", std::to_string(run.relaxation_time)});
        summary.push_back({"final_prop_A", format_g6(run.final_prop_a)});
        summary.push_back({"converged", run.converged ? "true" : "false"});
    }
    write_text_file(dir / "summary.txt", render_key_values(summary));
    write_text_file(dir / "trajectory.csv", render_aggregate_csv(result.aggregate));
    write_text_file(dir / "trajectory_std.csv", render_aggregate_std_csv(result.aggregate));
    write_common(dir, cfg, loaded.graph);
}

void run_sweep(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.vary == "none")
        throw ValidationError(
            "sweep requires vary to be one of init-prop, bc, seeding, alpha, sigma2");
    const fs::path dir = cfg.output_dir;
    ensure_output_dir(dir);
    const LoadedGraph loaded = acquire_graph(cfg);
    const SocialGraph& g = loaded.graph;
    if (cfg.vary == "seeding") {
        // The guidance comparison runs the top-K strategies whatever the
        // configured kind, so the K bound must hold.
        SeedingStrategy top = cfg.seeding;
        top.kind = SeedKind::kTopInDegree;
        validate_strategy(top, g.node_count());
    } else {
        validate_strategy(cfg.seeding, g.node_count());
    }

    const std::vector<double> values =
        cfg.values.empty() ? default_sweep_values(cfg.vary) : cfg.values;
    const ReplicationPlan base = plan_from(cfg);

    std::vector<VariationOutcome> outcomes;
    if (cfg.vary == "init-prop")
        outcomes = sweep_initial_proportion(g, cfg.params, cfg.seeding, cfg.relaxation, base, values);
    else if (cfg.vary == "bc")
        outcomes = sweep_bc(g, cfg.params, cfg.seeding, cfg.relaxation, base, values);
    else if (cfg.vary == "alpha")
        outcomes = sweep_trust_exponent(g, cfg.params, cfg.seeding, cfg.relaxation, base, values);
    else if (cfg.vary == "sigma2")
        outcomes = sweep_expertise_variance(g, cfg.params, cfg.seeding, cfg.relaxation, base, values);
    else
        outcomes = guidance_study(g, cfg.params, cfg.seeding, cfg.relaxation, base);

    for (const auto& outcome : outcomes) {
        write_text_file(dir / ("trajectory_" + outcome.label + ".csv"),
                        render_aggregate_csv(outcome.aggregate));
        write_text_file(dir / ("trajectory_" + outcome.label + "_std.csv"),
                        render_aggregate_std_csv(outcome.aggregate));
    }
    write_text_file(dir / "summary.csv", render_sweep_summary_csv(summarize(outcomes)));
    write_common(dir, cfg, g);
}

}  // namespace opinion::commands
