#include <algorithm>
#include <numeric>
#include <random>

#include "dcut/generators.hpp"

namespace dcut {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph random_gnm(int n, int m, std::uint64_t seed) {
    if (n < 0) throw input_error("gnm: negative n");
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m) throw input_error("gnm: m out of range for n");
    std::mt19937_64 rng(seed);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(m));
    std::sort(pairs.begin(), pairs.end());
    return Graph(n, pairs);
}

Graph random_bounded_degree(int n, int max_degree, std::uint64_t seed, bool connected, int edges) {
    if (n < 1 || max_degree < 0) throw input_error("bounded_degree: need n >= 1 and max_degree >= 0");
    if (connected && n > 2 && max_degree < 2) throw input_error("bounded_degree: a connected graph needs max_degree >= 2");
    if (connected && n == 2 && max_degree < 1) throw input_error("bounded_degree: a connected graph needs max_degree >= 1");
    const int cap = n * max_degree / 2;
    const int floor_m = connected ? n - 1 : 0;
    const int max_pairs = n * (n - 1) / 2;
    if (edges > std::min(cap, max_pairs) || (edges >= 0 && edges < floor_m))
        throw input_error("bounded_degree: requested edge count is infeasible");
    std::mt19937_64 rng(seed);
    const int target = edges >= 0 ? edges : uniform(rng, floor_m, std::max(floor_m, std::min(cap, max_pairs)));

    GraphBuilder b(n);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int m = 0;
    if (connected) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int k = 1; k < n; ++k) {
            std::vector<int> open;
            for (int t = 0; t < k; ++t)
                if (deg[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] < max_degree)
                    open.push_back(order[static_cast<std::size_t>(t)]);
            const int u = open[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(open.size()) - 1))];
            const int v = order[static_cast<std::size_t>(k)];
            b.add_edge(u, v);
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
            ++m;
        }
    }
    // Rejection sampling; gives up after a fixed number of failed draws.
    int failures = 0;
    while (m < target && failures < 200 * n * n) {
        const int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
        if (u == v || deg[static_cast<std::size_t>(u)] >= max_degree || deg[static_cast<std::size_t>(v)] >= max_degree ||
            b.has_edge(u, v)) {
            ++failures;
            continue;
        }
        b.add_edge(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        ++m;
    }
    if (edges >= 0 && m < target) throw input_error("bounded_degree: could not place the requested edges");
    return b.build();
}

PlantedInstance random_planted_modulator(int n, int k, double p, std::uint64_t seed) {
    if (n < 0 || k < 0 || k > n) throw input_error("planted_modulator: need 0 <= k <= n");
    if (p < 0.0 || p > 1.0) throw input_error("planted_modulator: p must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);

    GraphBuilder b(n);
    // Slots 0..n-k-1 form the clusters, slots n-k.. are the modulator.
    int slot = 0;
    while (slot < n - k) {
        const int size = uniform(rng, 1, std::min(5, n - k - slot));
        std::vector<int> members;
        for (int t = 0; t < size; ++t) members.push_back(label[static_cast<std::size_t>(slot + t)]);
        b.add_clique(members);
        slot += size;
    }
    PlantedInstance out;
    for (int t = n - k; t < n; ++t) {
        const int u = label[static_cast<std::size_t>(t)];
        out.modulator.push_back(u);
        for (int s = 0; s < t; ++s)
            if (coin(rng)) b.add_edge(u, label[static_cast<std::size_t>(s)]);
    }
    std::sort(out.modulator.begin(), out.modulator.end());
    out.graph = b.build();
    return out;
}

Hypergraph random_hypergraph3(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw input_error("hypergraph3: negative parameter");
    std::vector<std::array<int, 3>> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
    if (static_cast<std::size_t>(m) > all.size()) throw input_error("hypergraph3: more edges than triples");
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    Hypergraph h;
    h.n = n;
    h.edges.assign(all.begin(), all.begin() + m);
    return h;
}

}  // namespace dcut
