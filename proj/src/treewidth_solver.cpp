#include "dcut/treewidth_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace dcut {

namespace {

struct Key {
    std::uint64_t alpha = 0;
    std::uint32_t a_mask = 0;
    std::uint8_t t = 0;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = k.alpha * 0x9e3779b97f4a7c15ULL;
        h ^= (static_cast<std::uint64_t>(k.a_mask) << 1 | k.t) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct Pred {
    Key first;
    Key second;
};

using Table = std::unordered_map<Key, Pred, KeyHash>;

class Codec {
public:
    explicit Codec(int d) : base_(static_cast<std::uint64_t>(d) + 1) {}

    std::vector<int> unpack(std::uint64_t packed, std::size_t size) const {
        std::vector<int> alpha(size);
        for (std::size_t i = 0; i < size; ++i) {
            alpha[i] = static_cast<int>(packed % base_);
            packed /= base_;
        }
        return alpha;
    }

    std::uint64_t pack(const std::vector<int>& alpha) const {
        std::uint64_t packed = 0;
        for (std::size_t i = alpha.size(); i-- > 0;) packed = packed * base_ + static_cast<std::uint64_t>(alpha[i]);
        return packed;
    }

private:
    std::uint64_t base_;
};

std::uint32_t insert_bit(std::uint32_t mask, int pos, bool bit) {
    const std::uint32_t low = mask & ((1U << pos) - 1);
    const std::uint32_t high = mask >> pos;
    return low | (static_cast<std::uint32_t>(bit) << pos) | (high << (pos + 1));
}

std::uint32_t remove_bit(std::uint32_t mask, int pos) {
    const std::uint32_t low = mask & ((1U << pos) - 1);
    return low | ((mask >> (pos + 1)) << pos);
}

int position(const std::vector<int>& bag, int v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

class Solver {
public:
    Solver(const Graph& g, const NiceTreeDecomposition& ntd, int d, const TreewidthOptions& options)
        : g_(g), ntd_(ntd), d_(d), opts_(options), codec_(d) {
        const std::size_t k = ntd.nodes.size();
        tables_.resize(k);
        bag_adj_.resize(k);
        for (std::size_t x = 0; x < k; ++x) {
            const auto& bag = ntd.nodes[x].bag;
            auto& adj = bag_adj_[x];
            adj.assign(bag.size(), 0);
            for (std::size_t i = 0; i < bag.size(); ++i)
                for (std::size_t j = 0; j < bag.size(); ++j)
                    if (i != j && g.has_edge(bag[i], bag[j])) adj[i] |= 1U << j;
        }
    }

    TreewidthResult run() {
        TreewidthResult result;
        result.stats.width = ntd_.width();
        const std::size_t k = ntd_.nodes.size();
        for (std::size_t x = 0; x < k; ++x) {
            if (!compute(x)) {
                result.status = SolveStatus::BudgetExceeded;
                fill_stats(result.stats);
                return result;
            }
        }
        fill_stats(result.stats);
        if (opts_.check_entries) audit();
        const Table& root = tables_.back();
        auto it = root.find(Key{0, 0, 1});
        if (it == root.end()) return result;
        result.status = SolveStatus::Yes;
        std::vector<Side> sides(static_cast<std::size_t>(g_.num_vertices()), Side::B);
        std::vector<char> assigned(sides.size(), 0);
        reconstruct(static_cast<int>(k) - 1, it->first, sides, assigned);
        result.cut = Cut(std::move(sides));
        return result;
    }

private:
    bool valid(std::size_t x, std::uint32_t mask, const std::vector<int>& alpha, std::uint8_t t) const {
        const std::size_t b = alpha.size();
        const std::uint32_t full = b == 32 ? ~0U : (1U << b) - 1;
        for (std::size_t i = 0; i < b; ++i) {
            const bool in_a = (mask >> i) & 1U;
            const std::uint32_t other = in_a ? (full & ~mask) : mask;
            if (std::popcount(bag_adj_[x][i] & other) + alpha[i] > d_) return false;
        }
        if (mask != 0 && mask != full && t != 1) return false;
        return true;
    }

    bool store(std::size_t x, std::uint32_t mask, const std::vector<int>& alpha, std::uint8_t t, Pred pred) {
        if (!valid(x, mask, alpha, t)) return true;
        if (tables_[x].emplace(Key{codec_.pack(alpha), mask, t}, pred).second) {
            ++entries_;
            if (opts_.entry_budget != 0 && entries_ > opts_.entry_budget) return false;
        }
        return true;
    }

    bool compute(std::size_t x) {
        const NiceNode& node = ntd_.nodes[x];
        const std::size_t b = node.bag.size();
        const std::uint32_t full = b == 32 ? ~0U : (1U << b) - 1;
        switch (node.kind) {
            case NiceKind::Leaf:
                for (std::uint32_t mask = 0; mask < 4; ++mask) {
                    std::uint8_t t = (mask != 0 && mask != 3) ? 1 : 0;
                    if (!store(x, mask, {0, 0}, t, {})) return false;
                }
                return true;
            case NiceKind::Introduce: {
                const Table& child = tables_[static_cast<std::size_t>(node.children[0])];
                const int p = position(node.bag, node.vertex);
                const bool after_empty = b == 1;
                for (const auto& [key, unused] : child) {
                    std::vector<int> alpha = codec_.unpack(key.alpha, b - 1);
                    alpha.insert(alpha.begin() + p, 0);
                    for (int side = 0; side < 2; ++side) {
                        const std::uint32_t mask = insert_bit(key.a_mask, p, side == 0);
                        const std::uint8_t t = (mask == 0 || mask == full) ? key.t : 1;
                        if (!store(x, mask, alpha, t, {key, {}})) return false;
                        // The monochromatic part below an empty bag may sit on either side.
                        if (after_empty && t == 0 && !store(x, mask, alpha, 1, {key, {}})) return false;
                    }
                }
                return true;
            }
            case NiceKind::Forget: {
                const auto& child_node = ntd_.nodes[static_cast<std::size_t>(node.children[0])];
                const Table& child = tables_[static_cast<std::size_t>(node.children[0])];
                const int p = position(child_node.bag, node.vertex);
                for (const auto& [key, unused] : child) {
                    std::vector<int> alpha = codec_.unpack(key.alpha, b + 1);
                    const bool v_in_a = (key.a_mask >> p) & 1U;
                    bool absurd = false;
                    for (std::size_t j = 0; j < b + 1; ++j) {
                        if (static_cast<int>(j) == p || !((bag_adj_[static_cast<std::size_t>(node.children[0])][static_cast<std::size_t>(p)] >> j) & 1U))
                            continue;
                        const bool j_in_a = (key.a_mask >> j) & 1U;
                        if (j_in_a != v_in_a && ++alpha[j] > d_) absurd = true;
                    }
                    if (absurd) continue;
                    alpha.erase(alpha.begin() + p);
                    if (!store(x, remove_bit(key.a_mask, p), alpha, key.t, {key, {}})) return false;
                }
                return true;
            }
            case NiceKind::Join: {
                const Table& left = tables_[static_cast<std::size_t>(node.children[0])];
                const Table& right = tables_[static_cast<std::size_t>(node.children[1])];
                std::unordered_map<std::uint32_t, std::vector<Key>> by_mask;
                for (const auto& [key, unused] : right) by_mask[key.a_mask].push_back(key);
                for (const auto& [ky, unused] : left) {
                    auto group = by_mask.find(ky.a_mask);
                    if (group == by_mask.end()) continue;
                    const std::vector<int> ay = codec_.unpack(ky.alpha, b);
                    for (const Key& kz : group->second) {
                        std::vector<int> alpha = codec_.unpack(kz.alpha, b);
                        bool absurd = false;
                        for (std::size_t j = 0; j < b; ++j)
                            if ((alpha[j] += ay[j]) > d_) absurd = true;
                        if (absurd) continue;
                        if (!store(x, ky.a_mask, alpha, static_cast<std::uint8_t>(ky.t | kz.t), {ky, kz})) return false;
                    }
                }
                return true;
            }
        }
        return true;
    }

    void reconstruct(int x, const Key& key, std::vector<Side>& sides, std::vector<char>& assigned) const {
        std::vector<int> touched;
        reconstruct_into(x, key, sides, assigned, touched);
    }

    // A t = 0 entry over an empty bag stands for either monochromatic colouring of its subgraph,
    // so the subtree below it is flipped to the side the parent entry asks for.
    void reconstruct_into(int x, const Key& key, std::vector<Side>& sides, std::vector<char>& assigned,
                          std::vector<int>& touched) const {
        struct Pending {
            int node;
            Key key;
            Side side;
        };
        std::vector<Pending> pending;
        // Explicit stack: decompositions of long paths are deep.
        std::vector<std::pair<int, Key>> stack{{x, key}};
        while (!stack.empty()) {
            auto [node_id, k] = stack.back();
            stack.pop_back();
            const NiceNode& node = ntd_.nodes[static_cast<std::size_t>(node_id)];
            for (std::size_t i = 0; i < node.bag.size(); ++i) {
                const Side s = ((k.a_mask >> i) & 1U) ? Side::A : Side::B;
                auto v = static_cast<std::size_t>(node.bag[i]);
                if (assigned[v] && sides[v] != s) throw std::logic_error("treewidth DP: inconsistent reconstruction");
                if (!assigned[v]) touched.push_back(node.bag[i]);
                sides[v] = s;
                assigned[v] = 1;
            }
            const Pred& pred = tables_[static_cast<std::size_t>(node_id)].at(k);
            if (node.kind == NiceKind::Introduce && pred.first.t == 0 &&
                ntd_.nodes[static_cast<std::size_t>(node.children[0])].bag.empty()) {
                const bool in_a = (k.a_mask & 1U) != 0;
                pending.push_back({node.children[0], pred.first, (in_a == (k.t == 0)) ? Side::A : Side::B});
                continue;
            }
            if (!node.children.empty()) stack.emplace_back(node.children[0], pred.first);
            if (node.children.size() == 2) stack.emplace_back(node.children[1], pred.second);
        }
        for (const Pending& p : pending) {
            std::vector<int> sub;
            reconstruct_into(p.node, p.key, sides, assigned, sub);
            if (!sub.empty() && sides[static_cast<std::size_t>(sub.front())] != p.side)
                for (int v : sub) sides[static_cast<std::size_t>(v)] = p.side;
            touched.insert(touched.end(), sub.begin(), sub.end());
        }
    }

    void fill_stats(TreewidthStats& stats) const {
        stats.table_sizes.clear();
        stats.total_entries = entries_;
        for (std::size_t x = 0; x < tables_.size(); ++x) {
            stats.table_sizes.push_back(tables_[x].size());
            const double space = table_key_space(static_cast<int>(ntd_.nodes[x].bag.size()), d_);
            stats.max_fill_ratio = std::max(stats.max_fill_ratio, static_cast<double>(tables_[x].size()) / space);
        }
    }

    // Debug mode, see TreewidthOptions::check_entries.
    void audit() const {
        const std::size_t k = ntd_.nodes.size();
        const int n = g_.num_vertices();
        std::vector<std::vector<char>> below(k, std::vector<char>(static_cast<std::size_t>(n), 0));
        for (std::size_t x = 0; x < k; ++x) {
            for (int v : ntd_.nodes[x].bag) below[x][static_cast<std::size_t>(v)] = 1;
            for (int c : ntd_.nodes[x].children)
                for (int v = 0; v < n; ++v) below[x][static_cast<std::size_t>(v)] |= below[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
        }
        for (std::size_t x = 0; x < k; ++x) {
            const auto& bag = ntd_.nodes[x].bag;
            for (const auto& [key, unused] : tables_[x]) {
                std::vector<Side> sides(static_cast<std::size_t>(n), Side::B);
                std::vector<char> assigned(static_cast<std::size_t>(n), 0);
                reconstruct(static_cast<int>(x), key, sides, assigned);
                const std::vector<int> alpha = codec_.unpack(key.alpha, bag.size());
                bool has_a = false, has_b = false;
                for (int v = 0; v < n; ++v) {
                    if (!below[x][static_cast<std::size_t>(v)]) continue;
                    if (!assigned[static_cast<std::size_t>(v)]) throw std::logic_error("treewidth audit: unassigned vertex");
                    (sides[static_cast<std::size_t>(v)] == Side::A ? has_a : has_b) = true;
                    int outside = 0, total = 0;
                    for (int w : g_.neighbors(v)) {
                        if (!below[x][static_cast<std::size_t>(w)] || sides[static_cast<std::size_t>(w)] == sides[static_cast<std::size_t>(v)]) continue;
                        ++total;
                        if (!std::binary_search(bag.begin(), bag.end(), w)) ++outside;
                    }
                    if (total > d_) throw std::logic_error("treewidth audit: entry realises a violated vertex");
                    auto it = std::lower_bound(bag.begin(), bag.end(), v);
                    if (it != bag.end() && *it == v && alpha[static_cast<std::size_t>(it - bag.begin())] != outside)
                        throw std::logic_error("treewidth audit: alpha does not match its realisation");
                }
                if ((has_a && has_b) != (key.t == 1)) throw std::logic_error("treewidth audit: t does not match its realisation");
            }
            if (ntd_.nodes[x].kind == NiceKind::Join) audit_join(x);
        }
    }

    void audit_join(std::size_t x) const {
        const NiceNode& node = ntd_.nodes[x];
        const Table& left = tables_[static_cast<std::size_t>(node.children[0])];
        const Table& right = tables_[static_cast<std::size_t>(node.children[1])];
        const std::size_t b = node.bag.size();
        std::uint64_t alpha_space = 1;
        for (std::size_t i = 0; i < b; ++i) alpha_space *= static_cast<std::uint64_t>(d_ + 1);
        std::size_t found = 0;
        for (std::uint32_t mask = 0; mask < (1U << b); ++mask)
            for (std::uint64_t packed = 0; packed < alpha_space; ++packed)
                for (std::uint8_t t = 0; t < 2; ++t) {
                    const std::vector<int> alpha = codec_.unpack(packed, b);
                    bool value = false;
                    if (valid(x, mask, alpha, t)) {
                        for (const auto& [ay, az] : splittings(alpha)) {
                            for (std::uint8_t ty = 0; ty < 2 && !value; ++ty)
                                for (std::uint8_t tz = 0; tz < 2 && !value; ++tz) {
                                    if (ty + tz < t || ty + tz > 2 * t) continue;
                                    value = left.count(Key{codec_.pack(ay), mask, ty}) && right.count(Key{codec_.pack(az), mask, tz});
                                }
                            if (value) break;
                        }
                    }
                    const bool stored = tables_[x].count(Key{packed, mask, t}) != 0;
                    if (value != stored) throw std::logic_error("treewidth audit: join table disagrees with splitting recurrence");
                    found += value;
                }
        if (found != tables_[x].size()) throw std::logic_error("treewidth audit: join table has stray entries");
    }

    const Graph& g_;
    const NiceTreeDecomposition& ntd_;
    int d_;
    const TreewidthOptions& opts_;
    Codec codec_;
    std::vector<Table> tables_;
    std::vector<std::vector<std::uint32_t>> bag_adj_;
    std::uint64_t entries_ = 0;
};

}  // namespace

double table_key_space(int bag_size, int d) { return std::pow(2.0, bag_size) * std::pow(d + 1.0, bag_size) * 2.0; }

std::vector<std::pair<std::vector<int>, std::vector<int>>> splittings(const std::vector<int>& alpha) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> x(alpha.size(), 0);
    for (;;) {
        std::vector<int> y(alpha.size());
        for (std::size_t j = 0; j < alpha.size(); ++j) y[j] = alpha[j] - x[j];
        out.emplace_back(x, std::move(y));
        std::size_t j = 0;
        while (j < alpha.size() && x[j] == alpha[j]) x[j++] = 0;
        if (j == alpha.size()) break;
        ++x[j];
    }
    return out;
}

TreewidthResult solve_treewidth(const Graph& g, const NiceTreeDecomposition& ntd, int d, const TreewidthOptions& options) {
    if (d < 1) throw input_error("treewidth solver: d must be positive");
    validate(g, ntd);
    const int bag_limit = ntd.width() + 1;
    if (bag_limit > 31) throw input_error("treewidth solver: bags above 31 vertices are not supported");
    if (std::pow(d + 1.0, bag_limit) >= 9.2e18) throw input_error("treewidth solver: (d+1)^bag does not fit the key");
    return Solver(g, ntd, d, options).run();
}

TreewidthResult solve_treewidth(const Graph& g, int d, const TreewidthOptions& options) {
    if (d < 1) throw input_error("treewidth solver: d must be positive");
    if (g.num_vertices() < 2) return {};
    return solve_treewidth(g, niceify(g, heuristic_decomposition(g)), d, options);
}

}  // namespace dcut
