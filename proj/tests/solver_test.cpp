#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "dcut/bounded_degree.hpp"
#include "dcut/branch_solver.hpp"
#include "dcut/generators.hpp"
#include "dcut/oracle.hpp"
#include "dcut/tree_decomposition.hpp"
#include "dcut/treewidth_solver.hpp"
#include "support.hpp"

using namespace dcut;
using namespace dcut::testing;

namespace {

BranchOptions checked() {
    BranchOptions o;
    o.check_leaves = true;
    return o;
}

}  // namespace

TEST(Branch, Examples) {
    EXPECT_EQ(solve_branching(complete_bipartite(2, 3), 1).status, SolveStatus::No);
    Graph c4 = cycle_graph(4);
    BranchResult r = solve_branching(c4, 1, checked());
    ASSERT_EQ(r.status, SolveStatus::Yes);
    EXPECT_EQ(verify_cut(c4, *r.cut, 1).crossing_edges, 2u);
}

TEST(Branch, AgreesWithOracleOnRandomGraphs) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
        for (int d = 1; d <= 2; ++d) {
            BranchResult r = solve_branching(g, d, checked());
            ASSERT_EQ(r.status == SolveStatus::Yes, brute_force_d_cut(g, d).has_cut) << to_dimacs_string(g) << d;
            if (r.cut) EXPECT_TRUE(certifies(g, *r.cut, d));
        }
    }
}

TEST(Branch, ThreadedMatchesSequential) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, 9, 0.5);
        BranchOptions par;
        par.threads = 3;
        par.deterministic = false;
        BranchResult a = solve_branching(g, 2), b = solve_branching(g, 2, par);
        EXPECT_EQ(a.status, b.status);
        if (b.cut) EXPECT_TRUE(is_d_cut(g, *b.cut, 2));
        BranchResult c = solve_branching(g, 2);
        EXPECT_EQ(a.cut, c.cut);
    }
}

TEST(Branch, BudgetGivesUnknown) {
    BranchOptions o;
    o.node_budget = 1;
    EXPECT_EQ(solve_branching(complete_graph(12), 2, o).status, SolveStatus::BudgetExceeded);
}

TEST(BranchingFactor, KnownValues) {
    EXPECT_NEAR(branching_factor(BranchRule::B1, 1), 1.6180, 1e-3);
    EXPECT_NEAR(branching_factor(BranchRule::B2, 2), 1.7320, 1e-3);
    EXPECT_NEAR(branching_factor(BranchRule::B2, 1), 1.0000, 1e-3);
}

TEST(BranchingFactor, OrderedAndBelowTwo) {
    for (int d = 1; d <= 12; ++d) {
        const double b1 = branching_factor(BranchRule::B1, d), b2 = branching_factor(BranchRule::B2, d);
        EXPECT_GT(b1, b2);
        EXPECT_LT(b1, 2.0);
        // Root of x^(d+1) = (2^d - 1) x + 1.
        EXPECT_NEAR(std::pow(b1, d + 1), (std::pow(2.0, d) - 1) * b1 + 1, 1e-8 * std::pow(2.0, d + 1));
        EXPECT_NEAR(std::pow(b2, d), std::pow(2.0, d) - 1, 1e-8 * std::pow(2.0, d));
    }
}

TEST(BoundedDegree, Examples) {
    EXPECT_EQ(solve_bounded_degree(r_graph(), 2).verdict, DegreeVerdict::No);
    Graph c5 = cycle_graph(5);
    DegreeResult r = solve_bounded_degree(c5, 2);
    ASSERT_EQ(r.verdict, DegreeVerdict::Yes);
    EXPECT_TRUE(certifies(c5, *r.cut, 2));
    EXPECT_TRUE(r.cut->count(Side::A) == 1 || r.cut->count(Side::B) == 1);
    Graph star = star_graph(3);
    DegreeResult s = solve_bounded_degree(star, 1);
    ASSERT_EQ(s.verdict, DegreeVerdict::Yes);
    EXPECT_TRUE(certifies(star, *s.cut, 1));
    EXPECT_EQ(solve_bounded_degree(complete_graph(5), 1).verdict, DegreeVerdict::NotApplicable);
}

TEST(BoundedDegree, AgreesWithOracle) {
    std::mt19937_64 rng(41);
    for (int d = 1; d <= 3; ++d)
        for (int t = 0; t < 120; ++t) {
            const int n = 2 + static_cast<int>(rng() % 8);
            Graph g = random_graph(rng, n, 0.6);
            DegreeResult r = solve_bounded_degree(g, d);
            if (g.max_degree() > d + 2) {
                EXPECT_EQ(r.verdict, DegreeVerdict::NotApplicable);
                continue;
            }
            ASSERT_NE(r.verdict, DegreeVerdict::NotApplicable);
            EXPECT_EQ(r.verdict == DegreeVerdict::Yes, brute_force_d_cut(g, d).has_cut) << to_dimacs_string(g) << d;
            if (r.cut) EXPECT_TRUE(certifies(g, *r.cut, d));
        }
}

TEST(BoundedDegree, SubcubicLargeGraphsHaveMatchingCut) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_bounded_degree(8 + static_cast<int>(seed % 6), 3, seed);
        DegreeResult r = solve_bounded_degree(g, 1);
        ASSERT_EQ(r.verdict, DegreeVerdict::Yes);
        EXPECT_TRUE(certifies(g, *r.cut, 1));
    }
}

TEST(Niceify, Examples) {
    Graph k3 = complete_graph(3);
    TreeDecomposition single{{{0, 1, 2}}, {}};
    NiceTreeDecomposition a = niceify(k3, single);
    EXPECT_NO_THROW(validate(k3, a));
    EXPECT_EQ(a.width(), 2);
    EXPECT_LE(a.nodes.size(), 12u);

    Graph p4 = path_graph(4);
    TreeDecomposition path{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    NiceTreeDecomposition b = niceify(p4, path);
    EXPECT_NO_THROW(validate(p4, b));
    EXPECT_EQ(b.width(), 1);
}

TEST(Niceify, HeuristicDecompositionsValidate) {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 0.35);
        TreeDecomposition td = heuristic_decomposition(g);
        EXPECT_NO_THROW(validate(g, td));
        NiceTreeDecomposition ntd = niceify(g, td);
        EXPECT_NO_THROW(validate(g, ntd));
        EXPECT_EQ(ntd.width(), std::max(1, td.width()));
        EXPECT_TRUE(ntd.nodes.back().bag.empty());
    }
}

TEST(HeuristicDecomposition, Widths) {
    EXPECT_EQ(heuristic_decomposition(make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})).width(), 1);
    for (int n = 3; n <= 9; ++n) EXPECT_EQ(heuristic_decomposition(cycle_graph(n)).width(), 2);
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(heuristic_decomposition(complete_graph(n)).width(), n - 1);
}

TEST(TdFormat, RoundTripAndValidation) {
    Graph g = cycle_graph(6);
    TreeDecomposition td = heuristic_decomposition(g);
    std::stringstream ss;
    write_td(ss, td, 6);
    int n = 0;
    TreeDecomposition back = read_td(ss, &n);
    EXPECT_EQ(n, 6);
    EXPECT_EQ(back.bags, td.bags);
    EXPECT_EQ(back.tree_edges.size(), td.tree_edges.size());
    TreeDecomposition broken{{{0, 1, 2}, {3, 4, 5}}, {{0, 1}}};
    EXPECT_THROW(validate(g, broken), input_error);
    std::stringstream bad("s td 1 2 3\nb 1 1 9\n");
    EXPECT_THROW(validate(path_graph(3), read_td(bad)), input_error);
}

TEST(Treewidth, Examples) {
    Graph p4 = path_graph(4);
    TreeDecomposition path{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    TreewidthResult a = solve_treewidth(p4, niceify(p4, path), 1);
    ASSERT_EQ(a.status, SolveStatus::Yes);
    EXPECT_TRUE(certifies(p4, *a.cut, 1));
    Graph k4 = complete_graph(4);
    TreeDecomposition single{{{0, 1, 2, 3}}, {}};
    EXPECT_EQ(solve_treewidth(k4, niceify(k4, single), 1).status, SolveStatus::No);
}

TEST(Treewidth, AgreesWithOracleUnderDebugChecks) {
    std::mt19937_64 rng(61);
    TreewidthOptions debug;
    debug.check_entries = true;
    for (int t = 0; t < 120; ++t) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.45);
        for (int d = 1; d <= 2; ++d) {
            TreewidthResult r = solve_treewidth(g, d, debug);
            ASSERT_EQ(r.status == SolveStatus::Yes, brute_force_d_cut(g, d).has_cut) << to_dimacs_string(g) << d;
            if (r.cut) EXPECT_TRUE(certifies(g, *r.cut, d));
        }
    }
}

TEST(Treewidth, DisconnectedComponentsReconstructConsistently) {
    // Two K4 components: neither has a 1-cut alone, so the answer puts them on opposite sides.
    Graph g = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                             {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    TreewidthOptions debug;
    debug.check_entries = true;
    TreewidthResult r = solve_treewidth(g, 1, debug);
    ASSERT_EQ(r.status, SolveStatus::Yes);
    EXPECT_TRUE(certifies(g, *r.cut, 1));
    EXPECT_NE(r.cut->side(0), r.cut->side(4));

    std::mt19937_64 rng(65);
    for (int t = 0; t < 60; ++t) {
        const int n1 = 2 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 4);
        Graph a = random_graph(rng, n1, 0.8), c = random_graph(rng, n2, 0.8);
        GraphBuilder b(n1 + n2);
        for (auto [x, y] : a.edges()) b.add_edge(x, y);
        for (auto [x, y] : c.edges()) b.add_edge(n1 + x, n1 + y);
        Graph u = b.build();
        for (int d = 1; d <= 2; ++d) {
            TreewidthResult res = solve_treewidth(u, d, debug);
            ASSERT_EQ(res.status == SolveStatus::Yes, brute_force_d_cut(u, d).has_cut) << to_dimacs_string(u) << d;
            if (res.cut) EXPECT_TRUE(certifies(u, *res.cut, d));
        }
    }
}

TEST(Treewidth, DecompositionIndependent) {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 40; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.5);
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        TreeDecomposition single{{all}, {}};
        for (int d = 1; d <= 2; ++d)
            EXPECT_EQ(solve_treewidth(g, niceify(g, single), d).status, solve_treewidth(g, d).status);
    }
}

TEST(Treewidth, TableSizesWithinKeySpace) {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.5);
        NiceTreeDecomposition ntd = niceify(g, heuristic_decomposition(g));
        for (int d = 1; d <= 3; ++d) {
            TreewidthResult r = solve_treewidth(g, ntd, d);
            for (std::size_t x = 0; x < ntd.nodes.size(); ++x) {
                const int b = static_cast<int>(ntd.nodes[x].bag.size());
                EXPECT_LE(static_cast<double>(r.stats.table_sizes[x]), std::pow(2.0, b) * std::pow(d + 1.0, b) * 2);
                EXPECT_EQ(table_key_space(b, d), std::pow(2.0, b) * std::pow(d + 1.0, b) * 2);
            }
        }
    }
}

TEST(Treewidth, SplittingsCoverProduct) {
    std::mt19937_64 rng(64);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> alpha(rng() % 5);
        std::size_t expect = 1;
        for (int& a : alpha) {
            a = static_cast<int>(rng() % 4);
            expect *= static_cast<std::size_t>(a + 1);
        }
        auto s = splittings(alpha);
        EXPECT_EQ(s.size(), expect);
        std::sort(s.begin(), s.end());
        EXPECT_TRUE(std::adjacent_find(s.begin(), s.end()) == s.end());
        for (auto& [l, r] : s)
            for (std::size_t i = 0; i < alpha.size(); ++i) EXPECT_EQ(l[i] + r[i], alpha[i]);
    }
}

TEST(Treewidth, EntryBudget) {
    TreewidthOptions o;
    o.entry_budget = 3;
    EXPECT_EQ(solve_treewidth(complete_graph(8), 2, o).status, SolveStatus::BudgetExceeded);
}
