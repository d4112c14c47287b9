#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "opinion/errors.hpp"
#include "opinion/graph.hpp"
#include "opinion/stats.hpp"
#include "test_util.hpp"

using namespace opinion;

namespace {

SocialGraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in).graph;
}

bool same_graph(const SocialGraph& a, const SocialGraph& b) {
    return a.node_count() == b.node_count() && a.edges() == b.edges() &&
           a.labels() == b.labels();
}

}  // namespace

TEST_CASE("load compacts labels in first-seen order") {
    const SocialGraph g = graph_from_text("a b\na c\nb c\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "b");
    CHECK(g.label(2) == "c");
    CHECK(g.in_degree(2) == 2);  // c
    CHECK(g.in_degree(0) == 0);
    CHECK(g.out_degree(0) == 2);
}

TEST_CASE("load collapses duplicate edges") {
    std::istringstream in("a b\na b\n");
    const LoadedGraph loaded = load_edge_list(in);
    CHECK(loaded.graph.edge_count() == 1);
    CHECK(loaded.duplicate_edges_collapsed == 1);
    CHECK(loaded.self_loops_dropped == 0);
}

TEST_CASE("load drops self-loops with a count") {
    std::istringstream in("a a\na b\nb b\n");
    const LoadedGraph loaded = load_edge_list(in);
    CHECK(loaded.self_loops_dropped == 2);
    CHECK(loaded.graph.edge_count() == 1);
    // a node mentioned only in self-loops never materializes
    CHECK(loaded.graph.node_count() == 2);
}

TEST_CASE("load rejects malformed lines with their number") {
    std::istringstream one_token("a\n");
    CHECK_THROWS_WITH_AS(load_edge_list(one_token), doctest::Contains("line 1"),
                         ValidationError);
    std::istringstream three_tokens("a b\nx y z\n");
    CHECK_THROWS_WITH_AS(load_edge_list(three_tokens), doctest::Contains("line 2"),
                         ValidationError);
}

TEST_CASE("load skips comments and blank lines") {
    const SocialGraph g = graph_from_text("# header\n\n  \na b\n# trailing\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("load rejects empty input") {
    std::istringstream empty("");
    CHECK_THROWS_AS(load_edge_list(empty), ValidationError);
    std::istringstream comments_only("# nothing\n\n");
    CHECK_THROWS_AS(load_edge_list(comments_only), ValidationError);
}

TEST_CASE("adjacency is a consistent transpose on random graphs") {
    Rng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const SocialGraph g = testutil::random_graph(rng);
        std::size_t in_degree_sum = 0;
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            const auto id = static_cast<NodeId>(i);
            in_degree_sum += g.in_degree(id);
            REQUIRE(g.in_degree(id) == g.followers(id).size());
            REQUIRE(g.out_degree(id) == g.leaders(id).size());
            REQUIRE(std::is_sorted(g.leaders(id).begin(), g.leaders(id).end()));
            REQUIRE(std::is_sorted(g.followers(id).begin(), g.followers(id).end()));
            for (const NodeId leader : g.leaders(id)) {
                const auto fs = g.followers(leader);
                REQUIRE(std::binary_search(fs.begin(), fs.end(), id));
            }
            for (const NodeId follower : g.followers(id)) {
                const auto ls = g.leaders(follower);
                REQUIRE(std::binary_search(ls.begin(), ls.end(), id));
            }
        }
        REQUIRE(in_degree_sum == g.edge_count());
    }
}

TEST_CASE("prune cascades a chain to nothing") {
    const SocialGraph g = graph_from_text("a b\nb c\n");
    CHECK_THROWS_WITH_AS(prune_leaves(g, 1), doctest::Contains("every node"), ValidationError);
}

TEST_CASE("prune leaves a directed triangle alone") {
    const SocialGraph g = graph_from_text("a b\nb c\nc a\n");
    const PruneResult result = prune_leaves(g, 1);
    CHECK(same_graph(result.graph, g));
    CHECK(result.rounds == 0);
    CHECK(result.nodes_removed == 0);
    CHECK(result.kept == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("prune empties a star") {
    const SocialGraph g = graph_from_text("s1 hub\ns2 hub\ns3 hub\ns4 hub\ns5 hub\n");
    CHECK_THROWS_AS(prune_leaves(g, 1), ValidationError);
}

TEST_CASE("prune counts rounds of a pendant cascade") {
    // triangle a,b,c plus a 2-hop tail e -> d -> a
    const SocialGraph g = graph_from_text("a b\nb c\nc a\nd a\ne d\n");
    const PruneResult result = prune_leaves(g, 1);
    CHECK(result.graph.node_count() == 3);
    CHECK(result.graph.edge_count() == 3);
    CHECK(result.rounds == 2);
    CHECK(result.nodes_removed == 2);
    CHECK(result.graph.labels() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("prune matches the repeated-filter oracle and is idempotent") {
    Rng rng(202);
    for (int trial = 0; trial < 25; ++trial) {
        const SocialGraph g = testutil::random_graph(rng, 120, 3);
        const std::size_t threshold = 1 + uniform_below(rng, 2);
        const std::vector<NodeId> expected_kept = testutil::prune_oracle(g, threshold);
        if (expected_kept.empty()) {
            CHECK_THROWS_AS(prune_leaves(g, threshold), ValidationError);
            continue;
        }
        const PruneResult result = prune_leaves(g, threshold);
        REQUIRE(result.kept == expected_kept);
        REQUIRE(result.nodes_removed == g.node_count() - expected_kept.size());
        // survivors keep their labels
        for (std::size_t j = 0; j < result.kept.size(); ++j)
            REQUIRE(result.graph.label(static_cast<NodeId>(j)) == g.label(result.kept[j]));
        // no surviving degree may exceed its pre-prune value
        for (std::size_t j = 0; j < result.kept.size(); ++j)
            REQUIRE(result.graph.total_degree(static_cast<NodeId>(j)) <=
                    g.total_degree(result.kept[j]));
        const PruneResult again = prune_leaves(result.graph, threshold);
        REQUIRE(same_graph(again.graph, result.graph));
        REQUIRE(again.nodes_removed == 0);
    }
}

TEST_CASE("generator checks its arguments") {
    CHECK_THROWS_AS(generate_scale_free(5, 5, 1), ValidationError);
    CHECK_THROWS_AS(generate_scale_free(5, 0, 1), ValidationError);
}

TEST_CASE("generator construction arithmetic") {
    const SocialGraph g = generate_scale_free(10, 2, 42);
    CHECK(g.node_count() == 10);
    CHECK(g.edge_count() == 16);  // (10 - 2) * 2
    for (NodeId i = 0; i < 10; ++i) {
        if (i < 2) {
            CHECK(g.out_degree(i) == 0);
        } else {
            CHECK(g.out_degree(i) == 2);
            const auto leaders = g.leaders(i);
            std::set<NodeId> distinct(leaders.begin(), leaders.end());
            CHECK(distinct.size() == 2);
            // attachment only reaches nodes that already exist
            for (const NodeId x : leaders) CHECK(x < i);
        }
    }
}

TEST_CASE("generator is reproducible per seed") {
    const SocialGraph a = generate_scale_free(64, 3, 7);
    const SocialGraph b = generate_scale_free(64, 3, 7);
    CHECK(a.edges() == b.edges());
    const SocialGraph c = generate_scale_free(64, 3, 8);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("generated in-degree tail fits a decaying power law") {
    const SocialGraph g = generate_scale_free(5000, 4, 42);
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        ++histogram[g.in_degree(static_cast<NodeId>(i))];
    const testutil::LogLogFit fit = testutil::loglog_fit(histogram);
    CHECK(fit.points >= 10);
    CHECK(fit.slope < 0.0);
    CHECK(fit.r2 >= 0.7);
}

TEST_CASE("stats of a directed triangle") {
    const SocialGraph g = graph_from_text("a b\nb c\nc a\n");
    const GraphStats s = compute_stats(g);
    CHECK(s.node_count == 3);
    CHECK(s.edge_count == 3);
    CHECK(s.undirected_edge_count == 3);
    CHECK(s.avg_in_degree == doctest::Approx(1.0));
    CHECK(s.avg_degree_undirected == doctest::Approx(2.0));
    CHECK(s.diameter == 1);
    CHECK(s.avg_path_length == doctest::Approx(1.0));
    CHECK(s.avg_clustering == doctest::Approx(1.0));
    CHECK_FALSE(s.path_metrics_sampled);
}

TEST_CASE("stats of a three-node path") {
    const SocialGraph g = graph_from_text("a b\nb c\n");
    const GraphStats s = compute_stats(g);
    CHECK(s.diameter == 2);
    CHECK(s.avg_path_length == doctest::Approx(4.0 / 3.0));
    CHECK(s.avg_clustering == doctest::Approx(0.0));
    CHECK(s.in_degree_histogram == std::map<std::size_t, std::size_t>{{0, 1}, {1, 2}});
}

TEST_CASE("stats of a hub with four spokes") {
    const SocialGraph g = graph_from_text("s1 hub\ns2 hub\ns3 hub\ns4 hub\n");
    const GraphStats s = compute_stats(g);
    CHECK(s.diameter == 2);
    // 8 ordered hub-spoke pairs at distance 1, 12 spoke-spoke pairs at 2
    CHECK(s.avg_path_length == doctest::Approx(1.6));
    CHECK(s.avg_clustering == doctest::Approx(0.0));
    CHECK(s.in_degree_histogram == std::map<std::size_t, std::size_t>{{0, 4}, {4, 1}});
}

TEST_CASE("stats of a directed clique") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < 5; ++i)
        for (NodeId j = 0; j < 5; ++j)
            if (i != j) edges.emplace_back(i, j);
    const SocialGraph g = SocialGraph::from_edges(5, std::move(edges));
    const GraphStats s = compute_stats(g);
    CHECK(s.diameter == 1);
    CHECK(s.avg_path_length == doctest::Approx(1.0));
    CHECK(s.avg_clustering == doctest::Approx(1.0));
}

TEST_CASE("stats bounds hold on random graphs") {
    Rng rng(303);
    for (int trial = 0; trial < 15; ++trial) {
        const SocialGraph g = testutil::random_graph(rng, 80);
        const GraphStats s = compute_stats(g);
        REQUIRE(s.avg_clustering >= 0.0);
        REQUIRE(s.avg_clustering <= 1.0);
        REQUIRE(s.avg_path_length <= static_cast<double>(s.diameter));
        std::size_t total = 0;
        for (const auto& [degree, count] : s.in_degree_histogram) total += count;
        REQUIRE(total == g.node_count());
    }
}

TEST_CASE("path metrics switch to a declared sample on large graphs") {
    // ring of 20001 nodes: sampling cannot change D or L by symmetry
    const std::size_t n = kExactPathLimit + 1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
    const SocialGraph g = SocialGraph::from_edges(n, std::move(edges));
    const GraphStats s = compute_stats(g);
    CHECK(s.path_metrics_sampled);
    CHECK(s.path_sample_sources == kPathSampleSources);
    CHECK(s.diameter == n / 2);
    CHECK(s.avg_path_length == doctest::Approx((n / 2 + 1) / 2.0).epsilon(1e-9));
}
