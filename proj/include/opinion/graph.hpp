#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace opinion {

using NodeId = std::uint32_t;

/// Directed follow graph: an edge (follower, leader) means the follower
/// receives the leader's opinion. Ids are dense 0..N-1; original input
/// labels are kept alongside. Adjacency is stored CSR-style in both
/// directions and is immutable after construction, so concurrent reads
/// are safe.
class SocialGraph {
public:
    SocialGraph() = default;

    /// Builds from (follower, leader) pairs over ids 0..node_count-1.
    /// Self-loops and duplicates must already be removed. When labels is
    /// empty, nodes are labeled by their decimal id.
    static SocialGraph from_edges(std::size_t node_count,
                                  std::vector<std::pair<NodeId, NodeId>> edges,
                                  std::vector<std::string> labels = {});

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edge_count_; }

    /// Accounts node i follows (its leaders), ascending by id.
    std::span<const NodeId> leaders(NodeId i) const {
        return {leader_ids_.data() + leader_offsets_[i],
                leader_offsets_[i + 1] - leader_offsets_[i]};
    }

    /// Accounts following node i, ascending by id.
    std::span<const NodeId> followers(NodeId i) const {
        return {follower_ids_.data() + follower_offsets_[i],
                follower_offsets_[i + 1] - follower_offsets_[i]};
    }

    /// k_i: number of followers.
    std::size_t in_degree(NodeId i) const {
        return follower_offsets_[i + 1] - follower_offsets_[i];
    }

    /// Number of accounts followed.
    std::size_t out_degree(NodeId i) const {
        return leader_offsets_[i + 1] - leader_offsets_[i];
    }

    std::size_t total_degree(NodeId i) const { return in_degree(i) + out_degree(i); }

    const std::string& label(NodeId i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// All edges as (follower, leader), sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    std::size_t node_count_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::size_t> leader_offsets_{0};
    std::vector<NodeId> leader_ids_;
    std::vector<std::size_t> follower_offsets_{0};
    std::vector<NodeId> follower_ids_;
    std::vector<std::string> labels_;
};

struct LoadedGraph {
    SocialGraph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_collapsed = 0;
};

/// Parses "follower<ws>leader" lines. Lines that are blank or start with '#'
/// are skipped. Labels are arbitrary strings and get compacted to dense ids
/// in first-seen order. Throws ValidationError on a malformed line (with its
/// line number) and on input containing no edges at all.
LoadedGraph load_edge_list(std::istream& in);

struct PruneResult {
    SocialGraph graph;
    std::vector<NodeId> kept;  // surviving original ids, ascending
    int rounds = 0;
    std::size_t nodes_removed = 0;
};

/// Repeatedly removes nodes whose total degree (in + out) is at or below the
/// threshold until nothing changes, then compacts ids. Throws
/// ValidationError if nothing survives.
PruneResult prune_leaves(const SocialGraph& g, std::size_t degree_threshold = 1);

/// Directed preferential attachment: nodes 0..m_attach-1 seed the graph,
/// then each new node follows m_attach distinct existing nodes picked with
/// probability proportional to (in-degree + 1). Bit-reproducible for a
/// fixed seed. Requires n > m_attach >= 1.
SocialGraph generate_scale_free(std::size_t n, std::size_t m_attach, std::uint64_t seed);

}  // namespace opinion
