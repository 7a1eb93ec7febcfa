#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut::testing {

inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e(edges);
    return Graph(n, e);
}

// Independent d-cut check straight from the definition; used to judge the library verifier and solvers.
inline bool naive_is_d_cut(const Graph& g, const std::vector<int>& side, int d) {
    const int n = g.num_vertices();
    int on_b = 0;
    for (int v = 0; v < n; ++v) on_b += side[static_cast<std::size_t>(v)];
    if (on_b == 0 || on_b == n) return false;
    for (int v = 0; v < n; ++v) {
        int cross = 0;
        for (int w = 0; w < n; ++w)
            if (w != v && g.has_edge(v, w) && side[static_cast<std::size_t>(v)] != side[static_cast<std::size_t>(w)]) ++cross;
        if (cross > d) return false;
    }
    return true;
}

// Exhaustive answer over every bipartition, vertex 0 fixed on side 0.
inline bool naive_has_d_cut(const Graph& g, int d) {
    const int n = g.num_vertices();
    if (n < 2) return false;
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = (mask >> (v - 1)) & 1u;
        if (naive_is_d_cut(g, side, d)) return true;
    }
    return false;
}

inline bool certifies(const Graph& g, const Cut& cut, int d) {
    std::vector<int> side(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) side[static_cast<std::size_t>(v)] = cut.side(v) == Side::B;
    return naive_is_d_cut(g, side, d);
}

// Each pair becomes an edge with probability p.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::find(e.begin(), e.end(), Edge(u, v)) == e.end() && coin(rng)) e.emplace_back(u, v);
    std::sort(e.begin(), e.end());
    return Graph(n, e);
}

inline Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.num_vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

// Every labeled graph on n vertices; n <= 6 keeps this at 32768 graphs.
inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u) e.push_back(pairs[i]);
        out.emplace_back(n, e);
    }
    return out;
}

// Smallest k such that deleting some k vertices leaves a graph satisfying `ok`.
template <class Pred>
int min_deletion(const Graph& g, Pred ok) {
    const int n = g.num_vertices();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask);
        if (k >= best) continue;
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1u)) keep.push_back(v);
        if (ok(g.induced_subgraph(keep))) best = k;
    }
    return best;
}

inline bool naive_cluster(const Graph& g) {
    for (int a = 0; a < g.num_vertices(); ++a)
        for (int b = 0; b < g.num_vertices(); ++b)
            for (int c = 0; c < g.num_vertices(); ++c)
                if (a != c && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c)) return false;
    return true;
}

inline bool naive_cocluster(const Graph& g) { return naive_cluster(g.complement()); }

// K_4 on 0..3 plus vertex 4 joined to 0, 1, 2.
inline Graph r_graph() {
    return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

}  // namespace dcut::testing
