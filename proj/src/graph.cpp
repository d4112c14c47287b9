#include "opinion/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "opinion/errors.hpp"
#include "opinion/rng.hpp"

namespace opinion {

SocialGraph SocialGraph::from_edges(std::size_t node_count,
                                    std::vector<std::pair<NodeId, NodeId>> edges,
                                    std::vector<std::string> labels) {
    SocialGraph g;
    g.node_count_ = node_count;
    g.edge_count_ = edges.size();
    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    }
    g.labels_ = std::move(labels);

    // Forward CSR: sorted by (follower, leader) so leaders(i) comes out ascending.
    std::sort(edges.begin(), edges.end());
    g.leader_offsets_.assign(node_count + 1, 0);
    for (const auto& e : edges) ++g.leader_offsets_[e.first + 1];
    for (std::size_t i = 0; i < node_count; ++i) g.leader_offsets_[i + 1] += g.leader_offsets_[i];
    g.leader_ids_.resize(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) g.leader_ids_[k] = edges[k].second;

    // Reverse CSR: re-sort by (leader, follower).
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    g.follower_offsets_.assign(node_count + 1, 0);
    for (const auto& e : edges) ++g.follower_offsets_[e.second + 1];
    for (std::size_t i = 0; i < node_count; ++i)
        g.follower_offsets_[i + 1] += g.follower_offsets_[i];
    g.follower_ids_.resize(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) g.follower_ids_[k] = edges[k].first;

    return g;
}

std::vector<std::pair<NodeId, NodeId>> SocialGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < node_count_; ++i) {
        const auto follower = static_cast<NodeId>(i);
        for (const NodeId leader : leaders(follower)) out.emplace_back(follower, leader);
    }
    return out;
}

LoadedGraph load_edge_list(std::istream& in) {
    std::unordered_map<std::string, NodeId> id_by_label;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::size_t self_loops = 0;

    auto intern = [&](std::string&& label) {
        const auto [it, inserted] =
            id_by_label.try_emplace(std::move(label), static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(it->first);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string follower, leader, extra;
        if (!(tokens >> follower)) continue;    // blank
        if (follower.front() == '#') continue;  // comment
        if (!(tokens >> leader) || (tokens >> extra)) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected 'follower leader', got '" + line + "'");
        }
        if (follower == leader) {
            ++self_loops;  // dropped before interning; a pure self-loop adds no node
            continue;
        }
        const NodeId f = intern(std::move(follower));
        const NodeId l = intern(std::move(leader));
        edges.emplace_back(f, l);
    }
    if (edges.empty()) throw ValidationError("edge list contains no edges");

    std::sort(edges.begin(), edges.end());
    const std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    LoadedGraph out;
    out.self_loops_dropped = self_loops;
    out.duplicate_edges_collapsed = before - edges.size();
    const std::size_t node_count = labels.size();  // before labels is moved from
    out.graph = SocialGraph::from_edges(node_count, std::move(edges), std::move(labels));
    return out;
}

PruneResult prune_leaves(const SocialGraph& g, std::size_t degree_threshold) {
    if (degree_threshold < 1) throw ValidationError("degree_threshold must be >= 1");
    const std::size_t n = g.node_count();
    std::vector<char> alive(n, 1);
    std::vector<std::size_t> degree(n);
    for (std::size_t i = 0; i < n; ++i) degree[i] = g.total_degree(static_cast<NodeId>(i));

    int rounds = 0;
    std::size_t removed_total = 0;
    std::vector<NodeId> doomed;
    for (;;) {
        doomed.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && degree[i] <= degree_threshold) doomed.push_back(static_cast<NodeId>(i));
        if (doomed.empty()) break;
        ++rounds;
        removed_total += doomed.size();
        for (const NodeId i : doomed) alive[i] = 0;
        // Each edge into a surviving neighbor stops counting exactly once;
        // edges between two doomed nodes need no update.
        for (const NodeId i : doomed) {
            for (const NodeId x : g.leaders(i))
                if (alive[x]) --degree[x];
            for (const NodeId x : g.followers(i))
                if (alive[x]) --degree[x];
        }
    }

    std::vector<NodeId> kept;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) kept.push_back(static_cast<NodeId>(i));
    if (kept.empty())
        throw ValidationError("pruning removed every node; lower the degree threshold");

    std::vector<NodeId> remap(n, 0);
    for (std::size_t j = 0; j < kept.size(); ++j) remap[kept[j]] = static_cast<NodeId>(j);
    std::vector<std::string> labels;
    labels.reserve(kept.size());
    for (const NodeId i : kept) labels.push_back(g.label(i));
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const NodeId i : kept)
        for (const NodeId x : g.leaders(i))
            if (alive[x]) edges.emplace_back(remap[i], remap[x]);

    PruneResult out;
    out.graph = SocialGraph::from_edges(kept.size(), std::move(edges), std::move(labels));
    out.kept = std::move(kept);
    out.rounds = rounds;
    out.nodes_removed = removed_total;
    return out;
}

SocialGraph generate_scale_free(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
    if (m_attach < 1 || n <= m_attach)
        throw ValidationError("generator needs n > edges_per_node >= 1");
    Rng rng(seed);
    // bag holds each node once per unit of attachment weight (in-degree + 1),
    // so a uniform pick from it is the preferential choice.
    std::vector<NodeId> bag;
    bag.reserve(n + (n - m_attach) * m_attach);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve((n - m_attach) * m_attach);
    for (std::size_t w = 0; w < m_attach; ++w) bag.push_back(static_cast<NodeId>(w));

    std::vector<char> taken(n, 0);
    std::vector<NodeId> chosen;
    chosen.reserve(m_attach);
    for (std::size_t v = m_attach; v < n; ++v) {
        chosen.clear();
        while (chosen.size() < m_attach) {
            const NodeId w = bag[uniform_below(rng, bag.size())];
            if (taken[w]) continue;  // leaders of one node must be distinct
            taken[w] = 1;
            chosen.push_back(w);
        }
        for (const NodeId w : chosen) {
            taken[w] = 0;
            edges.emplace_back(static_cast<NodeId>(v), w);
            bag.push_back(w);
        }
        bag.push_back(static_cast<NodeId>(v));
    }
    return SocialGraph::from_edges(n, std::move(edges), {});
}

}  // namespace opinion
