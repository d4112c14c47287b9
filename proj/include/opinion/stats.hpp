#pragma once

#include <cstddef>
#include <map>

#include "opinion/graph.hpp"

namespace opinion {

/// Topological summary. Diameter, average path length, and clustering are
/// computed on the undirected projection; the two average degrees are
/// reported separately (directed M/N and undirected 2M/N).
struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;             // directed M
    std::size_t undirected_edge_count = 0;  // after projection
    double avg_in_degree = 0.0;             // M / N
    double avg_degree_undirected = 0.0;     // 2 * undirected M / N
    std::size_t diameter = 0;
    double avg_path_length = 0.0;  // over connected pairs only
    double avg_clustering = 0.0;   // mean local coefficient; degree < 2 counts 0
    std::map<std::size_t, std::size_t> in_degree_histogram;  // counts sum to N
    // Above kExactPathLimit nodes, D and L come from a fixed-seed source
    // sample instead of all-pairs BFS.
    bool path_metrics_sampled = false;
    std::size_t path_sample_sources = 0;
};

inline constexpr std::size_t kExactPathLimit = 20000;
inline constexpr std::size_t kPathSampleSources = 1024;

GraphStats compute_stats(const SocialGraph& g);

}  // namespace opinion
