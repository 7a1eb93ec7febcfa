#include <gtest/gtest.h>

#include "dcut/cluster_kernel.hpp"
#include "dcut/generators.hpp"
#include "dcut/oracle.hpp"
#include "support.hpp"

using namespace dcut;
using namespace dcut::testing;

namespace {

// u = 0 plus `count` copies of K_4; three vertices of each copy see u.
Graph pattern_instance(int count) {
    GraphBuilder b(1);
    for (int c = 0; c < count; ++c) {
        const int first = b.add_vertices(4);
        std::vector<int> k{first, first + 1, first + 2, first + 3};
        b.add_clique(k);
        for (int t = 0; t < 3; ++t) b.add_edge(0, first + t);
    }
    return b.build();
}

bool oracle(const Graph& g, int d) { return brute_force_d_cut(g, d).has_cut; }

std::vector<int> u_neighbors_in(const Graph& g, int v, const std::vector<int>& set) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (std::binary_search(set.begin(), set.end(), w)) out.push_back(w);
    return out;
}

}  // namespace

TEST(ClusterModulator, Examples) {
    EXPECT_TRUE(find_cluster_modulator(make_graph(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}})).empty());
    EXPECT_EQ(find_cluster_modulator(path_graph(3)).size(), 1u);
    auto p3 = find_induced_p3(path_graph(3));
    ASSERT_TRUE(p3);
    EXPECT_EQ((*p3)[1], 1);
}

TEST(ClusterModulator, MinimumAndApproximation) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.4);
        auto u = find_cluster_modulator(g);
        auto approx = find_cluster_modulator(g, true);
        const int best = min_deletion(g, naive_cluster);
        EXPECT_EQ(static_cast<int>(u.size()), best);
        EXPECT_LE(approx.size(), 3 * u.size());
        for (const auto* set : {&u, &approx}) {
            std::vector<int> rest;
            for (int v = 0; v < g.num_vertices(); ++v)
                if (!std::binary_search(set->begin(), set->end(), v)) rest.push_back(v);
            EXPECT_TRUE(naive_cluster(g.induced_subgraph(rest)));
        }
    }
}

TEST(N2d, CaseThreeSmallCluster) {
    Graph g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    EXPECT_EQ(compute_n2d(g, Modulator::singletons({0}), 0, 1), (std::vector<int>{1, 2}));
}

TEST(N2d, CaseFourBigCluster) {
    GraphBuilder b(6);
    std::vector<int> c{1, 2, 3, 4, 5};
    b.add_clique(c);
    for (int v : {1, 2, 3}) b.add_edge(0, v);
    EXPECT_EQ(compute_n2d(b.build(), Modulator::singletons({0}), 0, 2), c);
}

TEST(N2d, NoAdjacency) {
    Graph g = make_graph(4, {{1, 2}, {2, 3}, {1, 3}});
    EXPECT_TRUE(compute_n2d(g, Modulator::singletons({0}), 0, 1).empty());
}

TEST(N2d, MembersShareThePartSideInEveryCut) {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 60; ++t) {
        PlantedInstance p = random_planted_modulator(9, 2, 0.6, rng());
        Modulator mod = Modulator::singletons(p.modulator);
        for (int d = 1; d <= 2; ++d)
            for (int i = 0; i < static_cast<int>(mod.parts.size()); ++i) {
                auto n2d = compute_n2d(p.graph, mod, i, d);
                const int u = mod.parts[static_cast<std::size_t>(i)][0];
                enumerate_d_cuts(p.graph, d, [&](const Cut& c) {
                    for (int v : n2d) EXPECT_EQ(c.side(v), c.side(u));
                    return true;
                });
            }
    }
}

TEST(Kernel, TwoTrianglesYesByRuleOne) {
    Graph g = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    KernelResult r = kernelize(g, 1);
    ASSERT_EQ(r.status, KernelStatus::YesByRule1);
    EXPECT_EQ(r.graph, Graph(2));
    ASSERT_TRUE(r.rule1_graph && r.rule1_witness);
    EXPECT_TRUE(certifies(*r.rule1_graph, *r.rule1_witness, 1));
}

TEST(Kernel, PatternRemovalKeepsDUPlusOne) {
    Graph g = pattern_instance(5);
    KernelResult r = kernelize(g, 2, std::vector<int>{0});
    ASSERT_EQ(r.status, KernelStatus::Reduced);
    EXPECT_EQ(r.graph.num_vertices(), 1 + 3 * 4);
    ASSERT_FALSE(r.trace.records.empty());
    for (const auto& rec : r.trace.records) EXPECT_EQ(rec.rule, 8);
    EXPECT_EQ(oracle(g, 2), oracle(r.graph, 2));
}

TEST(Kernel, IrreducibleInstanceUnchanged) {
    Graph g = pattern_instance(3);
    KernelResult r = kernelize(g, 2, std::vector<int>{0});
    EXPECT_EQ(r.status, KernelStatus::Reduced);
    EXPECT_TRUE(r.trace.records.empty());
    EXPECT_EQ(r.graph, g);
}

TEST(Kernel, RejectsBadModulator) {
    EXPECT_THROW(kernelize(path_graph(3), 1, std::vector<int>{}), input_error);
    EXPECT_THROW(kernelize(path_graph(3), 1, std::vector<int>{7}), input_error);
    EXPECT_THROW(kernelize(path_graph(3), 0), input_error);
}

TEST(Kernel, SafenessPerRecordAndStructure) {
    std::mt19937_64 rng(73);
    std::array<int, 9> fired{};
    for (int t = 0; t < 120; ++t) {
        const int n = 5 + static_cast<int>(rng() % 6);
        const int k = 1 + static_cast<int>(rng() % 3);
        const int d = 1 + static_cast<int>(rng() % 2);
        PlantedInstance p = random_planted_modulator(n, k, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng());
        KernelResult r = kernelize(p.graph, d, p.modulator);
        ReplayResult replay = replay_trace(p.graph, r.trace);
        ASSERT_EQ(replay.checkpoints.size(), r.trace.records.size() + 1);
        bool prev = oracle(replay.checkpoints[0].graph, d);
        EXPECT_EQ(prev, oracle(p.graph, d));
        for (std::size_t s = 1; s < replay.checkpoints.size(); ++s) {
            const Checkpoint& cp = replay.checkpoints[s];
            ++fired[static_cast<std::size_t>(cp.rule)];
            if (cp.graph.num_vertices() > 20) continue;
            const bool now = oracle(cp.graph, d);
            EXPECT_EQ(prev, now) << "rule " << cp.rule << " seed-run " << t;
            // Parts with two or more vertices never split in any d-cut.
            enumerate_d_cuts(cp.graph, d, [&](const Cut& c) {
                for (const auto& part : cp.parts)
                    if (part.size() >= 2)
                        for (int v : part) EXPECT_EQ(c.side(v), c.side(part.front())) << "rule " << cp.rule;
                return true;
            });
            prev = now;
        }
        if (r.status == KernelStatus::YesByRule1) {
            EXPECT_TRUE(prev);
            EXPECT_TRUE(certifies(*r.rule1_graph, *r.rule1_witness, d));
            EXPECT_EQ(*r.rule1_graph, replay.checkpoints.back().graph);
        } else {
            EXPECT_EQ(replay.output, r.graph);
            EXPECT_EQ(prev, oracle(r.graph, d));
        }
    }
    int total = 0;
    for (int c : fired) total += c;
    EXPECT_GT(total, 0);
}

TEST(Kernel, ReducedInstanceProperties) {
    std::mt19937_64 rng(74);
    for (int t = 0; t < 80; ++t) {
        const int d = 1 + static_cast<int>(rng() % 2);
        PlantedInstance p = random_planted_modulator(6 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3), 0.5, rng());
        KernelResult r = kernelize(p.graph, d, p.modulator);
        if (r.status != KernelStatus::Reduced) continue;
        const Graph& g = r.graph;
        const Modulator& mod = r.modulator;
        const std::vector<int> u = mod.vertices();
        std::vector<int> x;
        for (std::size_t i = 0; i < mod.parts.size(); ++i) {
            const auto& xi = mod.private_cliques[i];
            x.insert(x.end(), xi.begin(), xi.end());
            for (std::size_t a = 0; a < xi.size(); ++a) {
                std::vector<int> expect(mod.parts[i]);
                for (std::size_t b = 0; b < xi.size(); ++b)
                    if (b != a) expect.push_back(xi[b]);
                std::sort(expect.begin(), expect.end());
                auto nb = g.neighbors(xi[a]);
                EXPECT_EQ(std::vector<int>(nb.begin(), nb.end()), expect);
            }
        }
        std::sort(x.begin(), x.end());
        ClusterView view = analyze_clusters(g, mod, d);
        std::vector<int> in_clusters;
        for (const auto& c : view.clusters) {
            in_clusters.insert(in_clusters.end(), c.vertices.begin(), c.vertices.end());
            bool heavy_vertex = false, heavy_u = false;
            for (int v : c.vertices) heavy_vertex |= static_cast<int>(u_neighbors_in(g, v, u).size()) >= d + 1;
            std::vector<int> sorted_c(c.vertices);
            std::sort(sorted_c.begin(), sorted_c.end());
            for (int w : u) heavy_u |= static_cast<int>(u_neighbors_in(g, w, sorted_c).size()) >= d + 1;
            if (!u.empty()) EXPECT_TRUE(heavy_vertex || heavy_u);
            if (c.big) EXPECT_TRUE(c.ambiguous || c.fixed);
        }
        EXPECT_EQ(in_clusters.size() + u.size() + x.size(), static_cast<std::size_t>(g.num_vertices()));
        EXPECT_LE(static_cast<double>(r.graph.num_vertices()), kernel_size_bound(d, static_cast<int>(p.modulator.size())));

        if (g.num_vertices() > 18) continue;
        enumerate_d_cuts(g, d, [&](const Cut& cut) {
            std::size_t unnatural = 0;
            for (int v : in_clusters) {
                auto nu = u_neighbors_in(g, v, u);
                if (nu.empty()) continue;
                bool one_part = false;
                for (const auto& part : mod.parts)
                    one_part |= std::all_of(nu.begin(), nu.end(),
                                            [&](int w) { return std::find(part.begin(), part.end(), w) != part.end(); });
                if (one_part && cut.side(v) != cut.side(nu.front())) ++unnatural;
            }
            EXPECT_LE(unnatural, static_cast<std::size_t>(d) * u.size());
            return true;
        });
    }
}

TEST(Trace, JsonRoundTripAndReplay) {
    std::mt19937_64 rng(75);
    for (int t = 0; t < 30; ++t) {
        PlantedInstance p = random_planted_modulator(10, 2, 0.6, rng());
        KernelResult r = kernelize(p.graph, 2, p.modulator);
        const std::string text = trace_to_json(r.trace);
        ReductionTrace back = trace_from_json(text);
        EXPECT_EQ(trace_to_json(back), text);
        EXPECT_NO_THROW(replay_trace(p.graph, back));
    }
}

TEST(Trace, MalformedInput) {
    EXPECT_THROW(trace_from_json("{"), input_error);
    EXPECT_THROW(trace_from_json(R"({"format":"other","version":1})"), input_error);
    KernelResult r = kernelize(pattern_instance(5), 2, std::vector<int>{0});
    ReductionTrace t = r.trace;
    t.records.front().removed_vertices.push_back(99);
    EXPECT_THROW(replay_trace(pattern_instance(5), t), input_error);
    EXPECT_THROW(replay_trace(pattern_instance(4), r.trace), input_error);
}

TEST(KernelBound, GrowsWithParameters) {
    EXPECT_GT(kernel_size_bound(2, 3), kernel_size_bound(2, 2));
    EXPECT_GT(kernel_size_bound(2, 2), kernel_size_bound(1, 2));
    EXPECT_EQ(kernel_size_bound(1, 0), kernel_size_bound(1, 1));
}
