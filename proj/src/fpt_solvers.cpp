#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dcut/cluster_kernel.hpp"
#include "dcut/fpt_solvers.hpp"

namespace dcut {

namespace {

constexpr int kMaxEnumerated = 24;

std::vector<int> complement_of(int n, const std::vector<int>& sorted_set) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(sorted_set.begin(), sorted_set.end(), v)) rest.push_back(v);
    return rest;
}

std::vector<std::vector<int>> clusters_outside(const Graph& g, const std::vector<int>& sorted_u) {
    std::vector<int> rest = complement_of(g.num_vertices(), sorted_u);
    Graph h = g.induced_subgraph(rest);
    if (!is_cluster_graph(h)) throw input_error("solve_dc: G - U is not a cluster graph");
    std::vector<std::vector<int>> out;
    for (auto& comp : connected_components(h)) {
        std::vector<int> mapped;
        for (int v : comp) mapped.push_back(rest[static_cast<std::size_t>(v)]);
        std::sort(mapped.begin(), mapped.end());
        out.push_back(std::move(mapped));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Per cluster vertex: indices into u of its U-neighbours.
std::vector<std::vector<int>> u_neighbors(const Graph& g, const std::vector<int>& cluster, const std::vector<int>& u) {
    std::vector<std::vector<int>> out(cluster.size());
    for (std::size_t k = 0; k < cluster.size(); ++k)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (g.has_edge(cluster[k], u[j])) out[k].push_back(static_cast<int>(j));
    return out;
}

// A candidate partition of one cluster; clusters of any size can go wholly to B.
struct Choice {
    std::uint32_t mask = 0;
    bool all_b = false;

    Side side(int k) const { return all_b || (k < 32 && (mask >> k & 1u)) ? Side::B : Side::A; }
    int on_b(int size) const { return all_b ? size : __builtin_popcount(mask); }
};

bool fits(const std::vector<std::vector<int>>& unb, int d, int size, const std::vector<Side>& side_of_u,
          const std::vector<int>& budget, Choice c, std::vector<int>& used) {
    const int in_r = c.on_b(size);
    std::fill(used.begin(), used.end(), 0);
    for (int k = 0; k < size; ++k) {
        const Side s = c.side(k);
        int cross = s == Side::A ? in_r : size - in_r;
        for (int j : unb[static_cast<std::size_t>(k)])
            if (side_of_u[static_cast<std::size_t>(j)] != s) {
                ++cross;
                ++used[static_cast<std::size_t>(j)];
            }
        if (cross > d) return false;
    }
    for (std::size_t j = 0; j < used.size(); ++j)
        if (used[j] > budget[j]) return false;
    return true;
}

std::vector<Choice> partitions_of(const std::vector<std::vector<int>>& unb, int d, int size,
                                  const std::vector<Side>& side_of_u, const std::vector<int>& budget) {
    std::vector<Choice> out;
    std::vector<int> used(budget.size());
    auto consider = [&](Choice c) {
        if (fits(unb, d, size, side_of_u, budget, c, used)) out.push_back(c);
    };
    if (size >= 2 * d + 1) {
        consider({0, false});
        consider({0, true});
        return out;
    }
    if (size > kMaxEnumerated) throw size_limit_error("solve_dc: cluster too large to enumerate");
    for (std::uint32_t mask = 0; mask < (1u << size); ++mask) consider({mask, false});
    return out;
}

class DcSearch {
public:
    DcSearch(const Graph& g, int d, std::vector<int> u, std::vector<std::vector<int>> clusters, DcStats* stats)
        : g_(g), d_(d), u_(std::move(u)), clusters_(std::move(clusters)), stats_(stats) {
        for (const auto& c : clusters_) {
            unb_.push_back(u_neighbors(g, c, u_));
        }
        // caps_[i][j]: neighbours of u_[j] inside clusters i, i+1, ...
        caps_.assign(clusters_.size() + 1, std::vector<int>(u_.size(), 0));
        for (std::size_t i = clusters_.size(); i-- > 0;) {
            caps_[i] = caps_[i + 1];
            for (const auto& list : unb_[i])
                for (int j : list) ++caps_[i][static_cast<std::size_t>(j)];
        }
    }

    std::optional<Cut> run(const std::vector<Side>& seed) {
        side_ = seed;
        std::vector<int> budget(u_.size());
        int flags = 0;
        for (std::size_t j = 0; j < u_.size(); ++j) {
            int cross = 0;
            for (std::size_t k = 0; k < u_.size(); ++k)
                if (seed[k] != seed[j] && g_.has_edge(u_[j], u_[k])) ++cross;
            if (cross > d_) return std::nullopt;
            budget[j] = d_ - cross;
            flags |= seed[j] == Side::A ? 1 : 2;
        }
        failed_.clear();
        choice_.assign(clusters_.size(), Choice{});
        if (!extend(0, budget, flags)) return std::nullopt;
        Cut cut(g_.num_vertices());
        for (std::size_t j = 0; j < u_.size(); ++j) cut.set(u_[j], seed[j]);
        for (std::size_t i = 0; i < clusters_.size(); ++i)
            for (std::size_t k = 0; k < clusters_[i].size(); ++k)
                cut.set(clusters_[i][k], choice_[i].side(static_cast<int>(k)));
        return cut;
    }

private:
    bool extend(std::size_t i, std::vector<int> budget, int flags) {
        if (i == clusters_.size()) return flags == 3;
        for (std::size_t j = 0; j < budget.size(); ++j) budget[j] = std::min(budget[j], caps_[i][j]);
        std::string key;
        key.reserve(budget.size() + 5);
        key.append(std::to_string(i)).push_back(':');
        key.push_back(static_cast<char>(flags));
        for (int b : budget) key.push_back(static_cast<char>(b));
        if (failed_.count(key)) return false;
        if (stats_) ++stats_->states;
        const auto& cluster = clusters_[i];
        const int size = static_cast<int>(cluster.size());
        for (Choice c : partitions_of(unb_[i], d_, size, side_, budget)) {
            if (stats_) ++stats_->candidates;
            std::vector<int> next = budget;
            for (int k = 0; k < size; ++k) {
                const Side s = c.side(k);
                for (int j : unb_[i][static_cast<std::size_t>(k)])
                    if (side_[static_cast<std::size_t>(j)] != s) --next[static_cast<std::size_t>(j)];
            }
            int next_flags = flags;
            const int in_r = c.on_b(size);
            if (in_r > 0) next_flags |= 2;
            if (in_r < size) next_flags |= 1;
            if (extend(i + 1, std::move(next), next_flags)) {
                choice_[i] = c;
                return true;
            }
        }
        failed_.insert(std::move(key));
        return false;
    }

    const Graph& g_;
    int d_;
    std::vector<int> u_;
    std::vector<std::vector<int>> clusters_;
    DcStats* stats_;
    std::vector<std::vector<std::vector<int>>> unb_;
    std::vector<std::vector<int>> caps_;
    std::vector<Side> side_;
    std::unordered_set<std::string> failed_;
    std::vector<Choice> choice_;
};

}  // namespace

std::vector<std::uint32_t> cluster_partitions(const Graph& g, int d, const std::vector<int>& cluster,
                                              const std::vector<int>& u, const std::vector<Side>& side_of_u,
                                              const std::vector<int>& budget) {
    const int size = static_cast<int>(cluster.size());
    if (size > 31) throw size_limit_error("cluster_partitions: cluster too large for a mask");
    std::vector<std::uint32_t> out;
    for (Choice c : partitions_of(u_neighbors(g, cluster, u), d, size, side_of_u, budget))
        out.push_back(c.all_b ? (1u << size) - 1 : c.mask);
    return out;
}

bool in_partition_set(const Graph& g, int d, const std::vector<int>& cluster, const std::vector<int>& u,
                      const std::vector<Side>& side_of_u, const std::vector<int>& budget, std::uint32_t mask) {
    auto side_of = [&](std::size_t k) { return (mask >> k & 1u) ? Side::B : Side::A; };
    for (std::size_t k = 0; k < cluster.size(); ++k) {
        int cross = 0;
        for (std::size_t k2 = 0; k2 < cluster.size(); ++k2)
            if (k2 != k && side_of(k2) != side_of(k) && g.has_edge(cluster[k], cluster[k2])) ++cross;
        for (std::size_t j = 0; j < u.size(); ++j)
            if (side_of_u[j] != side_of(k) && g.has_edge(cluster[k], u[j])) ++cross;
        if (cross > d) return false;
    }
    for (std::size_t j = 0; j < u.size(); ++j) {
        int toward = 0;
        for (std::size_t k = 0; k < cluster.size(); ++k)
            if (side_of(k) != side_of_u[j] && g.has_edge(cluster[k], u[j])) ++toward;
        if (toward > budget[j]) return false;
    }
    return true;
}

std::optional<Cut> solve_dc(const Graph& g, int d, const std::vector<int>& u_set,
                            const std::optional<std::vector<Side>>& fixed, DcStats* stats) {
    if (d < 1) throw input_error("solve_dc: d must be at least 1");
    std::vector<int> order(u_set.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return u_set[static_cast<std::size_t>(a)] < u_set[static_cast<std::size_t>(b)]; });
    std::vector<int> u;
    for (int k : order) u.push_back(u_set[static_cast<std::size_t>(k)]);
    if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw input_error("solve_dc: repeated modulator vertex");
    for (int v : u)
        if (v < 0 || v >= g.num_vertices()) throw input_error("solve_dc: modulator vertex out of range");
    if (fixed && fixed->size() != u_set.size()) throw input_error("solve_dc: fixed sides must match the modulator");
    if (u.size() > 62) throw size_limit_error("solve_dc: modulator too large");

    DcSearch search(g, d, u, clusters_outside(g, u), stats);
    if (fixed) {
        std::vector<Side> seed;
        for (int k : order) seed.push_back((*fixed)[static_cast<std::size_t>(k)]);
        if (stats) ++stats->seeds;
        return search.run(seed);
    }
    if (u.empty()) {
        if (stats) ++stats->seeds;
        return search.run({});
    }
    // Lowest U vertex pinned to A.
    const std::uint64_t seeds = std::uint64_t{1} << (u.size() - 1);
    for (std::uint64_t mask = 0; mask < seeds; ++mask) {
        std::vector<Side> seed(u.size(), Side::A);
        for (std::size_t j = 1; j < u.size(); ++j)
            if (mask >> (j - 1) & 1u) seed[j] = Side::B;
        if (stats) ++stats->seeds;
        if (auto cut = search.run(seed)) return cut;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> color_classes(const Graph& g) {
    Graph co = g.complement();
    if (!is_cluster_graph(co)) throw input_error("color_classes: graph is not complete multipartite");
    return connected_components(co);
}

std::vector<int> find_cocluster_modulator(const Graph& g, bool approx) {
    return find_cluster_modulator(g.complement(), approx);
}

namespace {

class DccRun {
public:
    DccRun(const Graph& g, int d, std::vector<int> u, DccStats* stats) : g_(g), d_(d), u_(std::move(u)), stats_(stats) {
        std::vector<int> rest = complement_of(g.num_vertices(), u_);
        Graph h = g.induced_subgraph(rest);
        if (!is_cluster_graph(h.complement())) throw input_error("solve_dcc: G - U is not complete multipartite");
        for (auto& comp : connected_components(h.complement())) {
            std::vector<int> mapped;
            for (int v : comp) mapped.push_back(rest[static_cast<std::size_t>(v)]);
            std::sort(mapped.begin(), mapped.end());
            classes_.push_back(std::move(mapped));
        }
        std::sort(classes_.begin(), classes_.end());
        for (const auto& c : classes_) f_.insert(f_.end(), c.begin(), c.end());
        std::sort(f_.begin(), f_.end());
        pick_case();
    }

    std::optional<Cut> run(const std::vector<Side>& seed) {
        Cut base(g_.num_vertices());
        for (std::size_t j = 0; j < u_.size(); ++j) base.set(u_[j], seed[j]);
        // Seeds that already overload a U vertex inside G[U] cannot extend.
        for (std::size_t j = 0; j < u_.size(); ++j) {
            int cross = 0;
            for (std::size_t k = 0; k < u_.size(); ++k)
                if (seed[k] != seed[j] && g_.has_edge(u_[j], u_[k])) ++cross;
            if (cross > d_) return std::nullopt;
        }
        if (stats_) ++stats_->cases[static_cast<int>(case_)];
        switch (case_) {
            case DccCase::Monochromatic:
            case DccCase::Bipartite:
                for (Side s : {Side::A, Side::B}) {
                    Cut cut = base;
                    for (int v : f_) cut.set(v, s);
                    if (is_d_cut(g_, cut, d_)) return cut;
                }
                return std::nullopt;
            case DccCase::Small:
            case DccCase::BoundedClasses:
                return enumerate(base, f_);
            case DccCase::LargeClass:
                return delegate(seed);
        }
        return std::nullopt;
    }

private:
    void pick_case() {
        const int t = static_cast<int>(classes_.size());
        const int total = static_cast<int>(f_.size());
        if (t >= 2 * d_ + 1) {
            case_ = DccCase::Monochromatic;
            return;
        }
        if (total <= 4 * d_) {
            case_ = DccCase::Small;
            return;
        }
        for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
            int s1 = 0;
            for (int i = 0; i < t; ++i)
                if (mask >> i & 1u) s1 += static_cast<int>(classes_[static_cast<std::size_t>(i)].size());
            const int lo = std::min(s1, total - s1), hi = std::max(s1, total - s1);
            if (lo >= d_ + 1 && hi >= 2 * d_ + 1) {
                case_ = DccCase::Bipartite;
                return;
            }
        }
        large_ = -1;
        for (int i = 0; i < t; ++i)
            if (static_cast<int>(classes_[static_cast<std::size_t>(i)].size()) >= 2 * d_ + 1) {
                large_ = i;
                break;
            }
        if (large_ < 0) {
            case_ = DccCase::BoundedClasses;
            return;
        }
        case_ = DccCase::LargeClass;
        const auto& big = classes_[static_cast<std::size_t>(large_)];
        if (total - static_cast<int>(big.size()) > d_)
            throw std::logic_error("solve_dcc: large class leaves more than d other vertices");
        for (int v : f_)
            if (!std::binary_search(big.begin(), big.end(), v)) others_.push_back(v);
    }

    std::optional<Cut> enumerate(const Cut& base, const std::vector<int>& free) {
        if (free.size() > 30) throw size_limit_error("solve_dcc: too many vertices to enumerate");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
            Cut cut = base;
            for (std::size_t k = 0; k < free.size(); ++k) cut.set(free[k], (mask >> k & 1u) ? Side::B : Side::A);
            if (is_d_cut(g_, cut, d_)) return cut;
        }
        return std::nullopt;
    }

    std::optional<Cut> delegate(const std::vector<Side>& seed) {
        std::vector<int> extended = u_;
        extended.insert(extended.end(), others_.begin(), others_.end());
        for (std::uint32_t mask = 0; mask < (1u << others_.size()); ++mask) {
            std::vector<Side> sides = seed;
            for (std::size_t k = 0; k < others_.size(); ++k) sides.push_back((mask >> k & 1u) ? Side::B : Side::A);
            if (stats_) ++stats_->delegated_seeds;
            if (auto cut = solve_dc(g_, d_, extended, sides)) return cut;
        }
        return std::nullopt;
    }

    const Graph& g_;
    int d_;
    std::vector<int> u_;
    DccStats* stats_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> f_;
    DccCase case_ = DccCase::Small;
    int large_ = -1;
    std::vector<int> others_;
};

}  // namespace

std::optional<Cut> solve_dcc(const Graph& g, int d, const std::vector<int>& u_set, DccStats* stats) {
    if (d < 1) throw input_error("solve_dcc: d must be at least 1");
    std::vector<int> u = u_set;
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw input_error("solve_dcc: repeated modulator vertex");
    for (int v : u)
        if (v < 0 || v >= g.num_vertices()) throw input_error("solve_dcc: modulator vertex out of range");
    if (u.size() > 62) throw size_limit_error("solve_dcc: modulator too large");
    DccRun run(g, d, u, stats);
    if (u.empty()) {
        if (stats) ++stats->seeds;
        return run.run({});
    }
    const std::uint64_t seeds = std::uint64_t{1} << (u.size() - 1);
    for (std::uint64_t mask = 0; mask < seeds; ++mask) {
        std::vector<Side> seed(u.size(), Side::A);
        for (std::size_t j = 1; j < u.size(); ++j)
            if (mask >> (j - 1) & 1u) seed[j] = Side::B;
        if (stats) ++stats->seeds;
        if (auto cut = run.run(seed)) return cut;
    }
    return std::nullopt;
}

}  // namespace dcut
