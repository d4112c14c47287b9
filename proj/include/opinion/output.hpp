#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opinion/config.hpp"
#include "opinion/dynamics.hpp"
#include "opinion/experiments.hpp"
#include "opinion/format.hpp"
#include "opinion/graph.hpp"
#include "opinion/stats.hpp"

namespace opinion {

/// Hash of the in-degree histogram; part of the graph fingerprint.
std::uint64_t degree_histogram_hash(const SocialGraph& g);

/// Creates the directory and proves it is writable. Throws IoError; runs
/// before any computation starts.
void ensure_output_dir(const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string render_trajectory_csv(std::span<const StepMetrics> trajectory);
std::string render_aggregate_csv(const AggregateTrajectory& agg);      // means
std::string render_aggregate_std_csv(const AggregateTrajectory& agg);  // stds
std::string render_sweep_summary_csv(std::span<const SweepRow> rows);
std::string render_histogram(const std::map<std::size_t, std::size_t>& histogram);
std::string render_stats_summary(const GraphStats& stats);
std::string render_key_values(
    std::span<const std::pair<std::string, std::string>> entries);
std::string render_edge_list(const SocialGraph& g);  // original labels
std::string render_id_map(const SocialGraph& g);     // id<TAB>label
std::string render_manifest(const RunConfig& cfg, const SocialGraph& g);

}  // namespace opinion
