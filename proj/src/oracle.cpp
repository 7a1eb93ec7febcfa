#include "dcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace dcut {

namespace {

void check_limits(const Graph& g, int d, int size_limit) {
    if (d < 1) throw input_error("oracle: d must be positive");
    if (g.num_vertices() > size_limit || g.num_vertices() > 63)
        throw size_limit_error("oracle: " + std::to_string(g.num_vertices()) + " vertices exceeds the brute-force limit of " +
                               std::to_string(std::min(size_limit, 63)));
}

Cut cut_from_mask(int n, std::uint64_t b_side) {
    Cut cut(n, Side::A);
    for (int v = 0; v < n; ++v)
        if ((b_side >> v) & 1U) cut.set(v, Side::B);
    return cut;
}

// Calls visit(b_side) for every valid mask; stops when visit returns false. Returns masks examined.
template <class Visit>
std::uint64_t scan(const Graph& g, int d, Visit&& visit) {
    const int n = g.num_vertices();
    if (n < 2) return 0;
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t last = std::uint64_t{1} << (n - 1);
    std::uint64_t examined = 0;
    for (std::uint64_t mask = 1; mask < last; ++mask) {
        ++examined;
        const std::uint64_t b_side = mask << 1;
        const std::uint64_t a_side = all & ~b_side;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::uint64_t other = ((b_side >> v) & 1U) ? a_side : b_side;
            ok = std::popcount(g.neighbor_mask(v) & other) <= d;
        }
        if (ok && !visit(b_side)) break;
    }
    return examined;
}

}  // namespace

OracleResult brute_force_d_cut(const Graph& g, int d, int size_limit) {
    check_limits(g, d, size_limit);
    OracleResult result;
    result.enumerated = scan(g, d, [&](std::uint64_t b_side) {
        result.has_cut = true;
        result.witness = cut_from_mask(g.num_vertices(), b_side);
        return false;
    });
    return result;
}

void enumerate_d_cuts(const Graph& g, int d, const std::function<bool(const Cut&)>& visit, int size_limit) {
    check_limits(g, d, size_limit);
    scan(g, d, [&](std::uint64_t b_side) { return visit(cut_from_mask(g.num_vertices(), b_side)); });
}

int min_cut_parameter(const Graph& g, int size_limit) {
    if (g.num_vertices() < 2) throw input_error("min_cut_parameter: a proper cut needs at least two vertices");
    const int top = std::max(1, g.max_degree());
    for (int d = 1; d <= top; ++d)
        if (brute_force_d_cut(g, d, size_limit).has_cut) return d;
    return top;  // unreachable: a singleton side has at most max_degree cross neighbours
}

AugmentedGraph attach_private_cliques(const Graph& g, int d) {
    const int n = g.num_vertices();
    GraphBuilder builder(n);
    for (auto [u, v] : g.edges()) builder.add_edge(u, v);
    AugmentedGraph out;
    for (int v = 0; v < n; ++v) {
        int first = builder.add_vertices(2 * d);
        std::vector<int> clique(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < 2 * d; ++i) clique[static_cast<std::size_t>(i)] = first + i;
        builder.add_clique(clique);
        for (int x : clique) builder.add_edge(v, x);
        out.designated.emplace_back(first, first + 1);
    }
    out.graph = builder.build();
    return out;
}

namespace {

// Every s-t separator containing the current S must contain a vertex of any
// s-t path in L - S. The search takes a path minimising the number of vertices
// that could still join S and branches on which of them is the first one
// taken; earlier path vertices are then barred from S. A vertex is also barred
// once adding it would put a (d+1)-clique into S.
class SeparatorSearch {
public:
    SeparatorSearch(const Graph& line, int d) : l_(line), d_(d) {
        const auto n = static_cast<std::size_t>(line.num_vertices());
        in_s_.assign(n, 0);
        barred_.assign(n, 0);
        dist_.assign(n, 0);
        parent_.assign(n, -1);
    }

    bool run(int source, int target, std::uint64_t& nodes) {
        std::fill(in_s_.begin(), in_s_.end(), 0);
        std::fill(barred_.begin(), barred_.end(), 0);
        source_ = source;
        target_ = target;
        nodes_ = &nodes;
        return search();
    }

private:
    bool has_clique(std::vector<int>& candidates, int needed) const {
        if (needed == 0) return true;
        for (std::size_t i = 0; i + static_cast<std::size_t>(needed) <= candidates.size(); ++i) {
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (l_.has_edge(candidates[i], candidates[j])) next.push_back(candidates[j]);
            if (has_clique(next, needed - 1)) return true;
        }
        return false;
    }

    bool completes_clique(int w) const {
        std::vector<int> in_s;
        for (int x : l_.neighbors(w))
            if (in_s_[static_cast<std::size_t>(x)]) in_s.push_back(x);
        if (static_cast<int>(in_s.size()) < d_) return false;
        return has_clique(in_s, d_);
    }

    bool choosable(int w) const {
        return w != source_ && w != target_ && !barred_[static_cast<std::size_t>(w)] && !completes_clique(w);
    }

    // 0-1 BFS in L - S where entering a choosable vertex costs 1. Returns false if the target is unreachable.
    bool cheapest_path(std::vector<int>& path) {
        const int n = l_.num_vertices();
        constexpr int kInf = 1 << 29;
        std::fill(dist_.begin(), dist_.end(), kInf);
        std::vector<std::int8_t> cost(static_cast<std::size_t>(n), -1);
        auto cost_of = [&](int w) {
            auto& c = cost[static_cast<std::size_t>(w)];
            if (c < 0) c = choosable(w) ? 1 : 0;
            return static_cast<int>(c);
        };
        std::deque<int> queue{source_};
        dist_[static_cast<std::size_t>(source_)] = 0;
        parent_[static_cast<std::size_t>(source_)] = -1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : l_.neighbors(u)) {
                if (in_s_[static_cast<std::size_t>(w)]) continue;
                int c = cost_of(w);
                int nd = dist_[static_cast<std::size_t>(u)] + c;
                if (nd < dist_[static_cast<std::size_t>(w)]) {
                    dist_[static_cast<std::size_t>(w)] = nd;
                    parent_[static_cast<std::size_t>(w)] = u;
                    if (c == 0)
                        queue.push_front(w);
                    else
                        queue.push_back(w);
                }
            }
        }
        if (dist_[static_cast<std::size_t>(target_)] == kInf) return false;
        path.clear();
        for (int w = parent_[static_cast<std::size_t>(target_)]; w != source_; w = parent_[static_cast<std::size_t>(w)])
            if (cost_of(w) == 1) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return true;
    }

    bool search() {
        ++*nodes_;
        std::vector<int> path;
        if (!cheapest_path(path)) return true;
        if (path.empty()) return false;
        std::vector<int> newly_barred;
        bool found = false;
        for (int w : path) {
            in_s_[static_cast<std::size_t>(w)] = 1;
            found = search();
            in_s_[static_cast<std::size_t>(w)] = 0;
            if (found) break;
            barred_[static_cast<std::size_t>(w)] = 1;
            newly_barred.push_back(w);
        }
        for (int w : newly_barred) barred_[static_cast<std::size_t>(w)] = 0;
        return found;
    }

    const Graph& l_;
    int d_;
    int source_ = -1;
    int target_ = -1;
    std::uint64_t* nodes_ = nullptr;
    std::vector<std::uint8_t> in_s_;
    std::vector<std::uint8_t> barred_;
    std::vector<int> dist_;
    std::vector<int> parent_;
};

}  // namespace

bool separator_characterization_check(const Graph& g, int d, SeparatorCheckStats* stats) {
    if (d < 1) throw input_error("separator check: d must be positive");
    if (!is_connected(g)) throw input_error("separator check: graph must be connected");
    const int n = g.num_vertices();
    if (n < 2) return false;
    AugmentedGraph aug = attach_private_cliques(g, d);
    LineGraph line = line_graph(aug.graph);
    auto index_of = [&](Edge e) {
        auto it = std::lower_bound(line.edge_of.begin(), line.edge_of.end(), e);
        return static_cast<int>(it - line.edge_of.begin());
    };
    SeparatorSearch search(line.graph, d);
    std::uint64_t nodes = 0;
    bool found = false;
    for (int s = 0; s < n && !found; ++s)
        for (int t = s + 1; t < n && !found; ++t)
            if (search.run(index_of(aug.designated[static_cast<std::size_t>(s)]),
                           index_of(aug.designated[static_cast<std::size_t>(t)]), nodes)) {
                found = true;
                if (stats) stats->pair = std::make_pair(s, t);
            }
    if (stats) {
        stats->line_vertices = line.graph.num_vertices();
        stats->search_nodes = nodes;
    }
    return found;
}

}  // namespace dcut
