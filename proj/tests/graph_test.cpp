#include <sstream>

#include <gtest/gtest.h>

#include "dcut/generators.hpp"
#include "support.hpp"

using namespace dcut;
using namespace dcut::testing;

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
    EXPECT_THROW(make_graph(3, {{1, 1}}), input_error);
    EXPECT_THROW(make_graph(3, {{0, 1}, {1, 0}}), input_error);
    EXPECT_THROW(make_graph(3, {{0, 3}}), input_error);
}

TEST(Graph, NeighborListsSortedAndSymmetric) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(rng, 9, 0.4);
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto nb = g.neighbors(v);
            EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
            for (int w : nb) EXPECT_TRUE(g.has_edge(w, v));
        }
    }
}

TEST(VerifyCut, C4HalfSplit) {
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::vector<int> a{0, 1};
    DCutReport r = verify_cut(c4, Cut::from_side_a(4, a), 1);
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.crossing_edges, 2u);
}

TEST(VerifyCut, TriangleSingletonViolates) {
    Graph k3 = complete_graph(3);
    for (int s = 0; s < 3; ++s) {
        Cut cut(3);
        cut.set(s, Side::B);
        DCutReport r = verify_cut(k3, cut, 1);
        EXPECT_FALSE(r.valid);
        ASSERT_TRUE(r.violating_vertex.has_value());
        EXPECT_EQ(*r.violating_vertex, s);
        EXPECT_EQ(r.max_cross_degree, 2);
    }
}

TEST(VerifyCut, K23HasNoMatchingCut) {
    Graph g = complete_bipartite(2, 3);
    for (int mask = 1; mask < 31; ++mask) {
        Cut cut(5);
        for (int v = 0; v < 5; ++v)
            if ((mask >> v) & 1) cut.set(v, Side::B);
        EXPECT_FALSE(verify_cut(g, cut, 1).valid) << cut.to_string();
    }
}

TEST(VerifyCut, ImproperAndSizeMismatch) {
    Graph g = path_graph(3);
    EXPECT_FALSE(verify_cut(g, Cut(3), 2).proper);
    EXPECT_THROW(verify_cut(g, Cut(2), 1), input_error);
    EXPECT_THROW(verify_cut(g, Cut::from_string("AAB"), 0), input_error);
}

TEST(VerifyCut, MonotoneSwapInvariantAndMatchesDefinition) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 0.5);
        Cut cut(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) cut.set(v, Side::B);
        for (int d = 1; d <= 3; ++d) {
            DCutReport r = verify_cut(g, cut, d);
            EXPECT_EQ(r.valid, certifies(g, cut, d));
            DCutReport s = verify_cut(g, cut.swapped(), d);
            EXPECT_EQ(r.valid, s.valid);
            EXPECT_EQ(r.crossing_edges, s.crossing_edges);
            EXPECT_EQ(r.max_cross_degree, s.max_cross_degree);
            EXPECT_EQ(r.violating_vertex, s.violating_vertex);
            if (r.valid) EXPECT_TRUE(verify_cut(g, cut, d + 1).valid);
        }
    }
}

TEST(VerifyCut, ComponentCutAlwaysValid) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 8, 0.2);
        auto comps = connected_components(g);
        if (comps.size() < 2) continue;
        for (int d = 1; d <= 3; ++d) EXPECT_TRUE(verify_cut(g, Cut::from_side_a(8, comps[0]), d).valid);
    }
}

TEST(GirthCycle, Examples) {
    EXPECT_FALSE(girth_cycle(make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})).has_value());
    auto c5 = girth_cycle(cycle_graph(5));
    ASSERT_TRUE(c5);
    EXPECT_EQ(c5->size(), 5u);
    auto k4 = girth_cycle(complete_graph(4));
    ASSERT_TRUE(k4);
    EXPECT_EQ(k4->size(), 3u);
}

TEST(GirthCycle, IsAShortestCycle) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 80; ++t) {
        Graph g = random_graph(rng, 8, 0.3);
        auto c = girth_cycle(g);
        if (!c) {
            EXPECT_LE(g.num_edges() + connected_components(g).size(), static_cast<std::size_t>(g.num_vertices()));
            continue;
        }
        const std::size_t len = c->size();
        for (std::size_t i = 0; i < len; ++i) EXPECT_TRUE(g.has_edge((*c)[i], (*c)[(i + 1) % len]));
        // No shorter cycle: BFS from every vertex finds no non-tree edge closing a shorter cycle.
        for (int s = 0; s < g.num_vertices(); ++s) {
            std::vector<int> dist(8, -1), par(8, -1);
            std::vector<int> q{s};
            dist[static_cast<std::size_t>(s)] = 0;
            for (std::size_t h = 0; h < q.size(); ++h) {
                int v = q[h];
                for (int w : g.neighbors(v)) {
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                        par[static_cast<std::size_t>(w)] = v;
                        q.push_back(w);
                    } else if (par[static_cast<std::size_t>(v)] != w) {
                        EXPECT_GE(static_cast<std::size_t>(dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1), len);
                    }
                }
            }
        }
    }
}

TEST(LineGraph, Examples) {
    EXPECT_EQ(line_graph(path_graph(3)).graph, complete_graph(2));
    EXPECT_EQ(line_graph(complete_graph(3)).graph, complete_graph(3));
    EXPECT_EQ(line_graph(star_graph(3)).graph, complete_graph(3));
    EXPECT_THROW(line_graph(Graph(3)), input_error);
}

TEST(LineGraph, CountsAndDegrees) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 7, 0.5);
        if (g.num_edges() == 0) continue;
        LineGraph l = line_graph(g);
        ASSERT_EQ(static_cast<std::size_t>(l.graph.num_vertices()), g.num_edges());
        for (int i = 0; i < l.graph.num_vertices(); ++i) {
            auto [u, v] = l.edge_of[static_cast<std::size_t>(i)];
            EXPECT_EQ(l.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }
}

TEST(MaxClique, Examples) {
    EXPECT_FALSE(max_clique_at_most(complete_graph(4), 3));
    EXPECT_TRUE(max_clique_at_most(cycle_graph(5), 2));
    EXPECT_TRUE(max_clique_at_most(Graph(3), 1));
}

TEST(ClusterGraph, Recognition) {
    EXPECT_TRUE(is_cluster_graph(make_graph(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}})));
    EXPECT_FALSE(is_cluster_graph(path_graph(3)));
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 6, 0.4);
        EXPECT_EQ(is_cluster_graph(g), naive_cluster(g));
    }
}

TEST(Dimacs, RoundTrip) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.4);
        std::stringstream ss;
        write_dimacs(ss, g);
        EXPECT_EQ(read_dimacs(ss), g);
        std::stringstream again(to_dimacs_string(g));
        EXPECT_EQ(instance_hash(g), instance_hash(read_dimacs(again)));
    }
}

TEST(Dimacs, MalformedInput) {
    for (const char* text : {"p edge 3 1\ne 1 4\n", "e 1 2\n", "p edge 3 2\ne 1 2\n", "p edge 2 1\ne 1 1\n", "p edge x y\n"}) {
        std::stringstream ss(text);
        EXPECT_THROW(read_dimacs(ss), input_error) << text;
    }
    std::stringstream ok("c comment\np edge 3 1\ne 1 3\n");
    EXPECT_EQ(read_dimacs(ok), make_graph(3, {{0, 2}}));
}

TEST(CutText, RoundTripAndErrors) {
    Cut c = Cut::from_string("ABBA");
    EXPECT_EQ(c.to_string(), "ABBA");
    EXPECT_EQ(c.count(Side::B), 2);
    EXPECT_THROW(Cut::from_string("AXB"), input_error);
}
