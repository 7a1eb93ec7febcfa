#include "dcut/bounded_degree.hpp"

#include <algorithm>

#include "dcut/branch_solver.hpp"
#include "dcut/oracle.hpp"

namespace dcut {

namespace {

DegreeResult yes(const Graph& g, int d, Cut cut, std::string reason) {
    if (!is_d_cut(g, cut, d)) throw std::logic_error("bounded-degree solver built an invalid cut (" + reason + ")");
    return {DegreeVerdict::Yes, std::move(cut), std::move(reason)};
}

int neighbors_in(const Graph& g, int v, const std::vector<char>& in_set) {
    int count = 0;
    for (int w : g.neighbors(v)) count += in_set[static_cast<std::size_t>(w)];
    return count;
}

// Lowest vertex outside `in_set` with at least `k` neighbours inside it.
std::optional<int> lowest_outside_with(const Graph& g, const std::vector<char>& in_set, int k) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!in_set[static_cast<std::size_t>(v)] && neighbors_in(g, v, in_set) >= k) return v;
    return std::nullopt;
}

Cut set_versus_rest(int n, const std::vector<char>& in_set) {
    Cut cut(n, Side::B);
    for (int v = 0; v < n; ++v)
        if (in_set[static_cast<std::size_t>(v)]) cut.set(v, Side::A);
    return cut;
}

}  // namespace

DegreeResult solve_bounded_degree(const Graph& g, int d) {
    if (d < 1) throw input_error("bounded-degree solver: d must be positive");
    const int n = g.num_vertices();
    if (g.max_degree() > d + 2) return {DegreeVerdict::NotApplicable, std::nullopt, "max degree exceeds d+2"};
    if (n < 2) return {DegreeVerdict::No, std::nullopt, "fewer than two vertices"};

    auto components = connected_components(g);
    if (components.size() > 1) return yes(g, d, Cut::from_side_a(n, components.front()), "disconnected");

    if (g.num_edges() == static_cast<std::size_t>(n - 1)) {
        // Removing any tree edge splits the vertex set; the lowest edge is used.
        const Edge cut_edge = g.edges().front();
        std::vector<Edge> rest;
        for (const Edge& e : g.edges())
            if (e != cut_edge) rest.push_back(e);
        auto parts = connected_components(Graph(n, rest));
        auto side_a = std::find_if(parts.begin(), parts.end(), [&](const std::vector<int>& p) {
            return std::binary_search(p.begin(), p.end(), cut_edge.first);
        });
        return yes(g, d, Cut::from_side_a(n, *side_a), "tree");
    }

    if (d == 1) {
        if (n >= 8) {
            BranchResult r = solve_branching(g, 1);
            if (r.status != SolveStatus::Yes)
                throw std::logic_error("bounded-degree solver: no matching cut found on a subcubic graph with n >= 8");
            return yes(g, d, *r.cut, "subcubic n>=8");
        }
        OracleResult r = brute_force_d_cut(g, 1);
        if (!r.has_cut) return {DegreeVerdict::No, std::nullopt, "subcubic n<=7 exhaustive"};
        return yes(g, d, *r.witness, "subcubic n<=7 exhaustive");
    }

    const std::vector<int> cycle = *girth_cycle(g);
    std::vector<char> in_c(static_cast<std::size_t>(n), 0);
    for (int v : cycle) in_c[static_cast<std::size_t>(v)] = 1;

    if (static_cast<int>(cycle.size()) == n) {
        const int v = *std::min_element(cycle.begin(), cycle.end());
        std::vector<int> single{v};
        return yes(g, d, Cut::from_side_a(n, single), "graph is its shortest cycle");
    }

    if (cycle.size() == 3 && d == 2) {
        Cut c_cut = set_versus_rest(n, in_c);
        if (is_d_cut(g, c_cut, d)) return yes(g, d, c_cut, "triangle");
        const int v = *lowest_outside_with(g, in_c, 3);
        std::vector<char> in_q = in_c;
        in_q[static_cast<std::size_t>(v)] = 1;
        if (n == 4) {
            std::vector<int> q(cycle.begin(), cycle.end());
            q.push_back(v);
            std::sort(q.begin(), q.end());
            std::vector<int> half{q[0], q[1]};
            return yes(g, d, Cut::from_side_a(n, half), "K4 split 2|2");
        }
        auto u = lowest_outside_with(g, in_q, 3);
        if (!u) return yes(g, d, set_versus_rest(n, in_q), "K4");
        std::vector<char> in_r = in_q;
        in_r[static_cast<std::size_t>(*u)] = 1;
        if (n == 5) return {DegreeVerdict::No, std::nullopt, "K4 plus a vertex on three of its vertices"};
        return yes(g, d, set_versus_rest(n, in_r), "K4 plus a vertex");
    }

    return yes(g, d, set_versus_rest(n, in_c), cycle.size() == 3 ? "triangle" : "girth>=4");
}

}  // namespace dcut
