#include <gtest/gtest.h>

#include "dcut/generators.hpp"
#include "dcut/oracle.hpp"
#include "support.hpp"

using namespace dcut;
using namespace dcut::testing;

TEST(Oracle, Examples) {
    EXPECT_FALSE(brute_force_d_cut(complete_bipartite(3, 5), 2).has_cut);
    Graph two = make_graph(4, {{0, 1}, {2, 3}});
    EXPECT_TRUE(brute_force_d_cut(two, 1).has_cut);
    std::vector<int> comp{0, 1};
    DCutReport split = verify_cut(two, Cut::from_side_a(4, comp), 1);
    EXPECT_TRUE(split.valid);
    EXPECT_EQ(split.crossing_edges, 0u);
    EXPECT_FALSE(brute_force_d_cut(complete_graph(5), 2).has_cut);
    EXPECT_TRUE(brute_force_d_cut(complete_graph(5), 3).has_cut);
}

TEST(Oracle, TinyGraphsHaveNoCut) {
    EXPECT_FALSE(brute_force_d_cut(Graph(0), 1).has_cut);
    EXPECT_FALSE(brute_force_d_cut(Graph(1), 1).has_cut);
}

TEST(Oracle, SizeLimit) { EXPECT_THROW(brute_force_d_cut(Graph(30), 1), size_limit_error); }

TEST(Oracle, WitnessIsFirstInMaskOrder) {
    // Masks 1 and 2 isolate an inner vertex; mask 3 is the first valid one.
    OracleResult r = brute_force_d_cut(path_graph(4), 1);
    ASSERT_TRUE(r.has_cut);
    EXPECT_EQ(r.witness->to_string(), "ABBA");
}

TEST(Oracle, MinCutParameter) {
    EXPECT_EQ(min_cut_parameter(complete_graph(5)), 3);
    EXPECT_EQ(min_cut_parameter(cycle_graph(6)), 1);
    EXPECT_EQ(min_cut_parameter(star_graph(4)), 1);
    EXPECT_THROW(min_cut_parameter(Graph(1)), input_error);
}

TEST(Oracle, AgreesWithNaiveDefinition) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.5);
        for (int d = 1; d <= 3; ++d) {
            OracleResult r = brute_force_d_cut(g, d);
            EXPECT_EQ(r.has_cut, naive_has_d_cut(g, d));
            if (r.has_cut) EXPECT_TRUE(certifies(g, *r.witness, d));
        }
    }
}

TEST(Oracle, RelabelInvariantAndMonotoneInD) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 150; ++t) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.55);
        Graph h = random_relabel(rng, g);
        for (int d = 1; d <= 3; ++d) {
            const bool yes = brute_force_d_cut(g, d).has_cut;
            EXPECT_EQ(yes, brute_force_d_cut(h, d).has_cut);
            if (yes) EXPECT_TRUE(brute_force_d_cut(g, d + 1).has_cut);
        }
    }
}

TEST(Oracle, EnumerateVisitsExactlyTheValidCuts) {
    Graph g = cycle_graph(6);
    int count = 0;
    enumerate_d_cuts(g, 1, [&](const Cut& c) {
        EXPECT_TRUE(certifies(g, c, 1));
        EXPECT_EQ(c.side(0), Side::A);
        ++count;
        return true;
    });
    // Any two disjoint edges of C6: 15 pairs minus 6 adjacent ones.
    EXPECT_EQ(count, 9);
}

TEST(SeparatorCheck, Examples) {
    EXPECT_FALSE(separator_characterization_check(complete_graph(3), 1));
    EXPECT_TRUE(separator_characterization_check(cycle_graph(4), 1));
    EXPECT_TRUE(separator_characterization_check(complete_graph(4), 2));
    EXPECT_THROW(separator_characterization_check(Graph(3), 1), input_error);
}

TEST(SeparatorCheck, AugmentedGraphShape) {
    AugmentedGraph a = attach_private_cliques(cycle_graph(4), 2);
    EXPECT_EQ(a.graph.num_vertices(), 4 + 4 * 4);
    EXPECT_EQ(a.designated.size(), 4u);
    for (auto [u, v] : a.designated) EXPECT_TRUE(a.graph.has_edge(u, v));
}

TEST(SeparatorCheck, MatchesOracleOnRandomConnectedGraphs) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_connected_graph(rng, 3 + static_cast<int>(rng() % 3), 0.4);
        for (int d = 1; d <= 2; ++d) EXPECT_EQ(separator_characterization_check(g, d), brute_force_d_cut(g, d).has_cut);
    }
}
