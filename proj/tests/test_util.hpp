#pragma once

// Shared fixtures and independent oracles for the test binaries. The oracles
// recompute results from first principles (per-edge accumulation, repeated
// filtering, plain least squares) so they cannot inherit a bug from the
// production code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opinion/agents.hpp"
#include "opinion/dynamics.hpp"
#include "opinion/graph.hpp"
#include "opinion/params.hpp"
#include "opinion/rng.hpp"

namespace testutil {

// ---- random fixtures -------------------------------------------------------

inline opinion::SocialGraph random_graph(opinion::Rng& rng, std::size_t max_nodes = 200,
                                         std::size_t max_out_degree = 6) {
    const std::size_t n = 2 + opinion::uniform_below(rng, max_nodes - 1);
    std::vector<std::pair<opinion::NodeId, opinion::NodeId>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t limit = std::min(max_out_degree, n - 1);
        const std::size_t degree = opinion::uniform_below(rng, limit + 1);
        for (std::size_t d = 0; d < degree; ++d) {
            std::size_t leader = opinion::uniform_below(rng, n - 1);
            if (leader >= i) ++leader;  // skip self
            edges.emplace_back(static_cast<opinion::NodeId>(i),
                               static_cast<opinion::NodeId>(leader));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return opinion::SocialGraph::from_edges(n, std::move(edges));
}

// Attributes drawn directly in [0,1]; payoff only reads the normalized columns.
inline opinion::AgentAttributes random_attrs(opinion::Rng& rng, std::size_t n) {
    opinion::AgentAttributes attrs;
    attrs.expertise.resize(n);
    attrs.trust.resize(n);
    attrs.stubborn.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        attrs.expertise[i] = opinion::uniform01(rng);
        attrs.trust[i] = opinion::uniform01(rng);
        attrs.stubborn[i] = opinion::uniform01(rng);
    }
    attrs.expertise_raw = attrs.expertise;
    attrs.trust_raw = attrs.trust;
    attrs.stubborn_raw = attrs.stubborn;
    return attrs;
}

inline std::vector<opinion::Opinion> random_opinions(opinion::Rng& rng, std::size_t n) {
    std::vector<opinion::Opinion> out(n);
    for (auto& o : out)
        o = opinion::uniform_below(rng, 2) == 0 ? opinion::kOpinionA : opinion::kOpinionB;
    return out;
}

inline opinion::ModelParams random_params(opinion::Rng& rng) {
    opinion::ModelParams p;
    p.b = 0.1 + 2.9 * opinion::uniform01(rng);
    p.c = 0.1 + 2.9 * opinion::uniform01(rng);
    p.omega1 = 2.0 * opinion::uniform01(rng);
    p.omega2 = 2.0 * opinion::uniform01(rng);
    p.omega3 = 2.0 * opinion::uniform01(rng);
    return p;
}

// ---- independent oracles ---------------------------------------------------

// Payoffs recomputed by one pass over the flat edge list.
inline std::vector<double> payoff_oracle(const opinion::SocialGraph& g,
                                         const std::vector<opinion::Opinion>& opinions,
                                         const opinion::AgentAttributes& attrs,
                                         const opinion::ModelParams& p) {
    std::vector<double> benefit(g.node_count(), 0.0);
    std::vector<double> cost(g.node_count(), 0.0);
    for (const auto& [follower, leader] : g.edges()) {
        const double bracket =
            1.0 + p.omega1 * attrs.trust[leader] + p.omega2 * attrs.expertise[leader];
        if (opinions[follower] == opinions[leader])
            benefit[follower] += bracket;
        else
            cost[follower] += bracket - p.omega3 * attrs.stubborn[follower];
    }
    std::vector<double> out(g.node_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.b * benefit[i] - p.c * cost[i];
    return out;
}

inline bool close_rel(double a, double b, double rel = 1e-12) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel * scale;
}

// Pruning by literal repeated filtering: rebuild the surviving edge set from
// scratch each round until it stops shrinking. Returns surviving original ids.
inline std::vector<opinion::NodeId> prune_oracle(const opinion::SocialGraph& g,
                                                 std::size_t threshold) {
    const auto all_edges = g.edges();
    std::vector<char> alive(g.node_count(), 1);
    for (;;) {
        std::vector<std::size_t> degree(g.node_count(), 0);
        for (const auto& [f, l] : all_edges) {
            if (alive[f] && alive[l]) {
                ++degree[f];
                ++degree[l];
            }
        }
        bool changed = false;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            if (alive[i] && degree[i] <= threshold) {
                alive[i] = 0;
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::vector<opinion::NodeId> kept;
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) kept.push_back(static_cast<opinion::NodeId>(i));
    return kept;
}

struct LogLogFit {
    double slope = 0.0;
    double r2 = 0.0;
    std::size_t points = 0;
};

// Least squares of log10(count) on log10(degree) over all nonzero bins k >= 1.
inline LogLogFit loglog_fit(const std::map<std::size_t, std::size_t>& histogram) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [degree, count] : histogram) {
        if (degree < 1 || count < 1) continue;
        xs.push_back(std::log10(static_cast<double>(degree)));
        ys.push_back(std::log10(static_cast<double>(count)));
    }
    LogLogFit fit;
    fit.points = xs.size();
    if (xs.size() < 2) return fit;
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double predicted = intercept + fit.slope * xs[i];
        ss_res += (ys[i] - predicted) * (ys[i] - predicted);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    fit.r2 = ss_tot == 0.0 ? 0.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

// ---- filesystem helpers ----------------------------------------------------

inline std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("opinion_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

// Every regular file under root, keyed by relative path.
inline std::map<std::string, std::string> read_tree(const std::filesystem::path& root) {
    std::map<std::string, std::string> tree;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        tree[std::filesystem::relative(entry.path(), root).string()] = read_file(entry.path());
    }
    return tree;
}

}  // namespace testutil
