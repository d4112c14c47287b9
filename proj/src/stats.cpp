#include "opinion/stats.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "opinion/parallel.hpp"
#include "opinion/rng.hpp"

namespace opinion {

namespace {

// Seed for source sampling on large graphs; fixed so stats are reproducible.
constexpr std::uint64_t kPathSampleSeed = 0x5a17ab1eu;

std::vector<std::vector<NodeId>> undirected_adjacency(const SocialGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto id = static_cast<NodeId>(i);
        auto& nbrs = adj[i];
        const auto out = g.leaders(id);
        const auto in = g.followers(id);
        nbrs.reserve(out.size() + in.size());
        nbrs.insert(nbrs.end(), out.begin(), out.end());
        nbrs.insert(nbrs.end(), in.begin(), in.end());
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

struct BfsAccum {
    std::uint64_t distance_sum = 0;
    std::uint64_t reached = 0;  // other nodes reached from the source
    std::size_t eccentricity = 0;
};

BfsAccum bfs_from(const std::vector<std::vector<NodeId>>& adj, NodeId source,
                  std::vector<std::int32_t>& dist, std::vector<NodeId>& queue) {
    dist.assign(adj.size(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    BfsAccum acc;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        const std::int32_t du = dist[u];
        for (const NodeId v : adj[u]) {
            if (dist[v] >= 0) continue;
            dist[v] = du + 1;
            queue.push_back(v);
            acc.distance_sum += static_cast<std::uint64_t>(du) + 1;
            ++acc.reached;
            acc.eccentricity = std::max<std::size_t>(acc.eccentricity, du + 1);
        }
    }
    return acc;
}

double mean_local_clustering(const std::vector<std::vector<NodeId>>& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return 0.0;
    std::vector<double> local(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
        const auto& nbrs = adj[i];
        const std::size_t d = nbrs.size();
        if (d < 2) return;
        std::size_t links = 0;
        for (std::size_t a = 0; a < d; ++a) {
            const auto& na = adj[nbrs[a]];
            for (std::size_t b = a + 1; b < d; ++b)
                if (std::binary_search(na.begin(), na.end(), nbrs[b])) ++links;
        }
        local[i] = 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
    });
    return std::accumulate(local.begin(), local.end(), 0.0) / static_cast<double>(n);
}

}  // namespace

GraphStats compute_stats(const SocialGraph& g) {
    GraphStats stats;
    const std::size_t n = g.node_count();
    stats.node_count = n;
    stats.edge_count = g.edge_count();
    for (std::size_t i = 0; i < n; ++i) ++stats.in_degree_histogram[g.in_degree(static_cast<NodeId>(i))];
    if (n == 0) return stats;

    const auto adj = undirected_adjacency(g);
    std::size_t undirected_degree_sum = 0;
    for (const auto& nbrs : adj) undirected_degree_sum += nbrs.size();
    stats.undirected_edge_count = undirected_degree_sum / 2;
    stats.avg_in_degree = static_cast<double>(stats.edge_count) / static_cast<double>(n);
    stats.avg_degree_undirected = static_cast<double>(undirected_degree_sum) / static_cast<double>(n);
    stats.avg_clustering = mean_local_clustering(adj);

    std::vector<NodeId> sources;
    if (n <= kExactPathLimit) {
        sources.resize(n);
        std::iota(sources.begin(), sources.end(), NodeId{0});
    } else {
        stats.path_metrics_sampled = true;
        std::vector<NodeId> pool(n);
        std::iota(pool.begin(), pool.end(), NodeId{0});
        Rng rng(kPathSampleSeed);
        const std::size_t count = std::min(kPathSampleSources, n);
        for (std::size_t j = 0; j < count; ++j) {
            const std::size_t pick = j + uniform_below(rng, pool.size() - j);
            std::swap(pool[j], pool[pick]);
        }
        sources.assign(pool.begin(), pool.begin() + count);
    }
    stats.path_sample_sources = stats.path_metrics_sampled ? sources.size() : 0;

    std::vector<BfsAccum> per_source(sources.size());
    parallel_for(sources.size(), [&](std::size_t s) {
        thread_local std::vector<std::int32_t> dist;
        thread_local std::vector<NodeId> queue;
        per_source[s] = bfs_from(adj, sources[s], dist, queue);
    });

    std::uint64_t distance_sum = 0;
    std::uint64_t pair_count = 0;
    for (const auto& acc : per_source) {
        distance_sum += acc.distance_sum;
        pair_count += acc.reached;
        stats.diameter = std::max(stats.diameter, acc.eccentricity);
    }
    stats.avg_path_length =
        pair_count == 0 ? 0.0 : static_cast<double>(distance_sum) / static_cast<double>(pair_count);
    return stats;
}

}  // namespace opinion
