#include <gtest/gtest.h>

#include "dcut/cluster_kernel.hpp"
#include "dcut/fpt_solvers.hpp"
#include "dcut/generators.hpp"
#include "dcut/oracle.hpp"
#include "support.hpp"

using namespace dcut;
using namespace dcut::testing;

namespace {

bool oracle(const Graph& g, int d) { return brute_force_d_cut(g, d).has_cut; }

Graph complete_multipartite(const std::vector<int>& sizes) {
    GraphBuilder b;
    std::vector<std::vector<int>> classes;
    for (int s : sizes) {
        const int first = b.add_vertices(s);
        std::vector<int> cls;
        for (int k = 0; k < s; ++k) cls.push_back(first + k);
        for (const auto& other : classes) b.add_complete_bipartite(cls, other);
        classes.push_back(cls);
    }
    return b.build();
}

std::vector<int> greedy_vertex_cover(const Graph& g) {
    std::vector<int> cover;
    for (auto [u, v] : g.edges())
        if (std::find(cover.begin(), cover.end(), u) == cover.end() && std::find(cover.begin(), cover.end(), v) == cover.end()) {
            cover.push_back(u);
            cover.push_back(v);
        }
    std::sort(cover.begin(), cover.end());
    return cover;
}

}  // namespace

TEST(SolveDc, Examples) {
    Graph two = make_graph(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    auto a = solve_dc(two, 1, {});
    ASSERT_TRUE(a);
    EXPECT_TRUE(certifies(two, *a, 1));
    EXPECT_FALSE(solve_dc(complete_bipartite(2, 3), 1, {0, 1}));
    EXPECT_THROW(solve_dc(path_graph(3), 1, {}), input_error);
}

TEST(SolveDc, AgreesWithOracleAndIsModulatorRobust) {
    std::mt19937_64 rng(81);
    for (int t = 0; t < 150; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        auto u = find_cluster_modulator(g);
        auto bigger = u;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0 && !std::binary_search(u.begin(), u.end(), v)) bigger.push_back(v);
        std::sort(bigger.begin(), bigger.end());
        for (int d = 1; d <= 2; ++d) {
            const bool expect = oracle(g, d);
            auto c = solve_dc(g, d, u);
            ASSERT_EQ(c.has_value(), expect) << to_dimacs_string(g) << d;
            if (c) EXPECT_TRUE(certifies(g, *c, d));
            auto c2 = solve_dc(g, d, bigger);
            EXPECT_EQ(c2.has_value(), expect);
            if (c2) EXPECT_TRUE(certifies(g, *c2, d));
        }
    }
}

TEST(SolveDc, VertexCoverModulator) {
    std::mt19937_64 rng(82);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.35);
        auto cover = greedy_vertex_cover(g);
        for (int d = 1; d <= 2; ++d) EXPECT_EQ(solve_dc(g, d, cover).has_value(), oracle(g, d));
    }
}

TEST(SolveDc, FixedSidesRestrictSearch) {
    Graph c4 = cycle_graph(4);
    std::vector<int> u{0, 1};
    auto same = solve_dc(c4, 1, u, std::vector<Side>{Side::A, Side::A});
    ASSERT_TRUE(same);
    EXPECT_EQ(same->side(0), same->side(1));
    auto split = solve_dc(c4, 1, u, std::vector<Side>{Side::A, Side::B});
    ASSERT_TRUE(split);
    EXPECT_EQ(split->side(0), Side::A);
    EXPECT_EQ(split->side(1), Side::B);
}

TEST(ClusterPartitions, MatchValidatorAndMonochromaticShortcut) {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 200; ++t) {
        const int d = 1 + static_cast<int>(rng() % 2);
        const int size = 1 + static_cast<int>(rng() % 6);
        const int nu = 1 + static_cast<int>(rng() % 3);
        GraphBuilder b(nu + size);
        std::vector<int> u, cluster;
        for (int k = 0; k < nu; ++k) u.push_back(k);
        for (int k = 0; k < size; ++k) cluster.push_back(nu + k);
        b.add_clique(cluster);
        for (int a : u)
            for (int c : cluster)
                if (rng() % 2) b.add_edge(a, c);
        Graph g = b.build();
        std::vector<Side> sides;
        std::vector<int> budget;
        for (int k = 0; k < nu; ++k) {
            sides.push_back(rng() % 2 ? Side::A : Side::B);
            budget.push_back(static_cast<int>(rng() % (d + 1)));
        }
        auto masks = cluster_partitions(g, d, cluster, u, sides, budget);
        std::sort(masks.begin(), masks.end());
        const std::uint32_t full = (1u << size) - 1;
        for (std::uint32_t m : masks) EXPECT_TRUE(in_partition_set(g, d, cluster, u, sides, budget, m));
        if (size >= 2 * d + 1) {
            for (std::uint32_t m : masks) EXPECT_TRUE(m == 0 || m == full);
        } else {
            std::vector<std::uint32_t> expect;
            for (std::uint32_t m = 0; m <= full; ++m)
                if (in_partition_set(g, d, cluster, u, sides, budget, m)) expect.push_back(m);
            EXPECT_EQ(masks, expect);
        }
    }
}

TEST(SolveDcc, Examples) {
    Graph k33 = complete_bipartite(3, 3);
    EXPECT_FALSE(solve_dcc(k33, 1, {}));
    Graph multi = complete_multipartite({1, 1, 1, 2});
    DccStats stats;
    auto c = solve_dcc(multi, 1, {}, &stats);
    EXPECT_EQ(c.has_value(), oracle(multi, 1));
    EXPECT_EQ(stats.cases[static_cast<int>(DccCase::Monochromatic)], stats.seeds);
    EXPECT_THROW(solve_dcc(path_graph(4), 1, {}), input_error);
}

TEST(SolveDcc, AgreesWithOracle) {
    std::mt19937_64 rng(84);
    std::array<std::uint64_t, 5> cases{};
    for (int t = 0; t < 150; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        auto u = find_cocluster_modulator(g);
        for (int d = 1; d <= 2; ++d) {
            DccStats stats;
            auto c = solve_dcc(g, d, u, &stats);
            ASSERT_EQ(c.has_value(), oracle(g, d)) << to_dimacs_string(g) << d;
            if (c) EXPECT_TRUE(certifies(g, *c, d));
            for (int k = 0; k < 5; ++k) cases[static_cast<std::size_t>(k)] += stats.cases[k];
        }
    }
    EXPECT_GT(cases[static_cast<int>(DccCase::Small)], 0u);
}

TEST(SolveDcc, LargeMultipartiteCases) {
    std::mt19937_64 rng(85);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> sizes;
        const int classes = 2 + static_cast<int>(rng() % 3);
        for (int k = 0; k < classes; ++k) sizes.push_back(1 + static_cast<int>(rng() % 5));
        Graph base = complete_multipartite(sizes);
        // One extra vertex with random attachments forms U.
        GraphBuilder b(base.num_vertices() + 1);
        for (auto [x, y] : base.edges()) b.add_edge(x, y);
        const int extra = base.num_vertices();
        for (int v = 0; v < extra; ++v)
            if (rng() % 2) b.add_edge(extra, v);
        Graph g = b.build();
        if (g.num_vertices() > 20) continue;
        for (int d = 1; d <= 2; ++d) {
            auto c = solve_dcc(g, d, {extra});
            EXPECT_EQ(c.has_value(), oracle(g, d));
            if (c) EXPECT_TRUE(certifies(g, *c, d));
        }
    }
}

TEST(CoclusterModulator, ExamplesAndMinimum) {
    EXPECT_TRUE(find_cocluster_modulator(complete_multipartite({2, 3, 1})).empty());
    EXPECT_EQ(find_cocluster_modulator(path_graph(3).complement()).size(), 1u);
    EXPECT_EQ(color_classes(complete_bipartite(2, 3)).size(), 2u);
    std::mt19937_64 rng(86);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.6);
        EXPECT_EQ(static_cast<int>(find_cocluster_modulator(g).size()), min_deletion(g, naive_cocluster));
    }
}
