#include "opinion/output.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "opinion/errors.hpp"
#include "opinion/version.hpp"

namespace opinion {

namespace {

std::string hex16(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::uint64_t degree_histogram_hash(const SocialGraph& g) {
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        ++histogram[g.in_degree(static_cast<NodeId>(i))];
    std::string flat;
    for (const auto& [degree, count] : histogram)
        flat += std::to_string(degree) + ":" + std::to_string(count) + "\n";
    return fnv1a64(flat);
}

void ensure_output_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    // Prove writability now, before any computation runs.
    const auto probe = dir / ".write_probe";
    {
        std::ofstream f(probe, std::ios::binary | std::ios::trunc);
        f << "ok";
        f.close();
        if (!f) throw IoError("output directory " + dir.string() + " is not writable");
    }
    std::filesystem::remove(probe, ec);
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f) throw IoError("cannot write " + path.string());
}

std::string render_trajectory_csv(std::span<const StepMetrics> trajectory) {
    std::string out = "step,prop_A,mean_payoff,flips\n";
    for (const auto& row : trajectory) {
        out += std::to_string(row.step);
        out += ',';
        out += format_g6(row.prop_a);
        out += ',';
        out += format_g6(row.mean_payoff);
        out += ',';
        out += std::to_string(row.flips);
        out += '\n';
    }
    return out;
}

std::string render_aggregate_csv(const AggregateTrajectory& agg) {
    std::string out = "step,prop_A,mean_payoff,flips\n";
    for (std::size_t s = 0; s < agg.mean_prop_a.size(); ++s) {
        out += std::to_string(s);
        out += ',';
        out += format_g6(agg.mean_prop_a[s]);
        out += ',';
        out += format_g6(agg.mean_payoff[s]);
        out += ',';
        out += format_g6(agg.mean_flips[s]);
        out += '\n';
    }
    return out;
}

std::string render_aggregate_std_csv(const AggregateTrajectory& agg) {
    std::string out = "step,std_prop_A,std_payoff\n";
    for (std::size_t s = 0; s < agg.std_prop_a.size(); ++s) {
        out += std::to_string(s);
        out += ',';
        out += format_g6(agg.std_prop_a[s]);
        out += ',';
        out += format_g6(agg.std_payoff[s]);
        out += '\n';
    }
    return out;
}

std::string render_sweep_summary_csv(std::span<const SweepRow> rows) {
    std::string out = "variation_value,mean_relax,std_relax,mean_final_prop,std_final_prop\n";
    for (const auto& row : rows) {
        out += row.label;
        out += ',';
        out += format_g6(row.mean_relaxation);
        out += ',';
        out += format_g6(row.std_relaxation);
        out += ',';
        out += format_g6(row.mean_final_prop);
        out += ',';
        out += format_g6(row.std_final_prop);
        out += '\n';
    }
    return out;
}

std::string render_histogram(const std::map<std::size_t, std::size_t>& histogram) {
    std::string out;
    for (const auto& [degree, count] : histogram)
        out += std::to_string(degree) + "\t" + std::to_string(count) + "\n";
    return out;
}

std::string render_key_values(
    std::span<const std::pair<std::string, std::string>> entries) {
    std::string out;
    for (const auto& [key, value] : entries) out += key + "=" + value + "\n";
    return out;
}

std::string render_stats_summary(const GraphStats& stats) {
    const std::vector<std::pair<std::string, std::string>> entries = {
        {"nodes", std::to_string(stats.node_count)},
        {"edges_directed", std::to_string(stats.edge_count)},
        {"edges_undirected", std::to_string(stats.undirected_edge_count)},
        {"avg_in_degree", format_g6(stats.avg_in_degree)},
        {"avg_degree_undirected", format_g6(stats.avg_degree_undirected)},
        {"diameter", std::to_string(stats.diameter)},
        {"avg_path_length", format_g6(stats.avg_path_length)},
        {"avg_clustering", format_g6(stats.avg_clustering)},
        {"path_metrics_sampled", stats.path_metrics_sampled ? "true" : "false"},
        {"path_sample_sources", std::to_string(stats.path_sample_sources)},
    };
    return render_key_values(entries);
}

std::string render_edge_list(const SocialGraph& g) {
    std::string out;
    for (const auto& [follower, leader] : g.edges())
        out += g.label(follower) + "\t" + g.label(leader) + "\n";
    return out;
}

std::string render_id_map(const SocialGraph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        out += std::to_string(i) + "\t" + g.label(static_cast<NodeId>(i)) + "\n";
    return out;
}

std::string render_manifest(const RunConfig& cfg, const SocialGraph& g) {
    const std::vector<std::pair<std::string, std::string>> entries = {
        {"tool", kToolName},
        {"version", kToolVersion},
        {"config_hash", hex16(config_fingerprint(cfg))},
        {"master_seed", std::to_string(cfg.master_seed)},
        {"graph_nodes", std::to_string(g.node_count())},
        {"graph_edges", std::to_string(g.edge_count())},
        {"degree_histogram_hash", hex16(degree_histogram_hash(g))},
    };
    return render_key_values(entries);
}

}  // namespace opinion
