#include "dcut/branch_solver.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace dcut {

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Yes: return "YES";
        case SolveStatus::No: return "NO";
        case SolveStatus::BudgetExceeded: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

enum Label : std::uint8_t { kA = 0, kB = 1, kD = 2 };

struct SharedBudget {
    std::uint64_t limit = 0;
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> exhausted{false};
    std::atomic<bool> stop{false};
};

class Search {
public:
    Search(const Graph& g, int d, const BranchOptions& opts, SharedBudget& budget)
        : g_(g), d_(d), opts_(opts), budget_(budget) {
        const auto n = static_cast<std::size_t>(g.num_vertices());
        label_.assign(n, kD);
        cnt_[kA].assign(n, 0);
        cnt_[kB].assign(n, 0);
    }

    // Runs one seed. Returns true when a cut was found; sets aborted_ on budget exhaustion or stop.
    bool run_seed(int u, int v) {
        for (auto& x : label_) x = kD;
        std::fill(cnt_[kA].begin(), cnt_[kA].end(), 0);
        std::fill(cnt_[kB].begin(), cnt_[kB].end(), 0);
        trail_.clear();
        violations_ = 0;
        assign(u, kA);
        assign(v, kB);
        return node(0);
    }

    bool aborted() const { return aborted_; }
    const Cut& cut() const { return cut_; }
    BranchStats stats;

private:
    int dgr_d(int v) const {
        auto i = static_cast<std::size_t>(v);
        return g_.degree(v) - cnt_[kA][i] - cnt_[kB][i];
    }

    // Neighbours across the cut for an assigned vertex.
    int cross(int v) const {
        auto i = static_cast<std::size_t>(v);
        return label_[i] == kA ? cnt_[kB][i] : cnt_[kA][i];
    }

    void assign(int v, Label s) {
        auto i = static_cast<std::size_t>(v);
        label_[i] = s;
        trail_.push_back(v);
        const Label other = s == kA ? kB : kA;
        if (cnt_[other][i] > d_) ++violations_;
        for (int w : g_.neighbors(v)) {
            auto j = static_cast<std::size_t>(w);
            if (++cnt_[s][j] == d_ + 1 && label_[j] == other) ++violations_;
        }
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            auto i = static_cast<std::size_t>(v);
            const Label s = label_[i];
            const Label other = s == kA ? kB : kA;
            for (int w : g_.neighbors(v)) {
                auto j = static_cast<std::size_t>(w);
                if (cnt_[s][j]-- == d_ + 1 && label_[j] == other) --violations_;
            }
            if (cnt_[other][i] > d_) --violations_;
            label_[i] = kD;
        }
    }

    bool charge() {
        ++stats.nodes_expanded;
        if (budget_.stop.load(std::memory_order_relaxed)) {
            aborted_ = true;
            return false;
        }
        if (budget_.limit != 0 && budget_.used.fetch_add(1, std::memory_order_relaxed) + 1 > budget_.limit) {
            budget_.exhausted = true;
            aborted_ = true;
            return false;
        }
        return true;
    }

    bool node(int depth) {
        if (!charge()) return false;
        stats.max_depth = std::max(stats.max_depth, depth);
        const std::size_t mark = trail_.size();
        const int n = g_.num_vertices();

        // R4 assignments can re-enable R1 and R3, so all three are re-checked until stable.
        for (;;) {
            if (violations_ > 0) {
                ++stats.rule_counts[static_cast<std::size_t>(Rule::R1)];
                undo_to(mark);
                return false;
            }
            int forced = -1;
            Label forced_side = kD;
            bool contradiction = false;
            for (int v = 0; v < n; ++v) {
                auto i = static_cast<std::size_t>(v);
                if (label_[i] != kD) continue;
                const bool to_a = cnt_[kA][i] >= d_ + 1, to_b = cnt_[kB][i] >= d_ + 1;
                if (to_a && to_b) {
                    contradiction = true;
                    break;
                }
                if (forced == -1 && (to_a || to_b)) {
                    forced = v;
                    forced_side = to_a ? kA : kB;
                }
            }
            if (trail_.size() == static_cast<std::size_t>(n)) break;  // R2, checked after R1
            if (contradiction) {
                ++stats.rule_counts[static_cast<std::size_t>(Rule::R3)];
                undo_to(mark);
                return false;
            }
            if (forced == -1) break;
            ++stats.rule_counts[static_cast<std::size_t>(Rule::R4)];
            assign(forced, forced_side);
        }

        if (trail_.size() == static_cast<std::size_t>(n)) {
            ++stats.rule_counts[static_cast<std::size_t>(Rule::R2)];
            return emit();
        }

        // B1
        for (int v = 0; v < n; ++v) {
            auto i = static_cast<std::size_t>(v);
            if (label_[i] == kD || dgr_d(v) < d_ + 1) continue;
            ++stats.rule_counts[static_cast<std::size_t>(Rule::B1)];
            std::vector<int> x, rest;
            for (int w : g_.neighbors(v))
                if (label_[static_cast<std::size_t>(w)] == kD) (static_cast<int>(x.size()) < d_ ? x : rest).push_back(w);
            const Label own = label_[i], other = own == kA ? kB : kA;
            const std::uint32_t all = (1U << d_) - 1;
            for (std::uint32_t mask = 0; mask <= all; ++mask) {
                const std::size_t branch_mark = trail_.size();
                for (int b = 0; b < d_; ++b) assign(x[static_cast<std::size_t>(b)], (mask >> b) & 1U ? other : own);
                // With all of X across, v has no cross budget left: its other D-neighbours follow v.
                if (mask == all)
                    for (int w : rest) assign(w, own);
                if (node(depth + 1)) return true;
                undo_to(branch_mark);
                if (aborted_) break;
            }
            undo_to(mark);
            return false;
        }

        // B2
        for (int v = 0; v < n; ++v) {
            auto i = static_cast<std::size_t>(v);
            if (label_[i] == kD) continue;
            const int across = cross(v);
            if (across + dgr_d(v) < d_ + 1) continue;
            ++stats.rule_counts[static_cast<std::size_t>(Rule::B2)];
            const int s = d_ + 1 - across;
            std::vector<int> x;
            for (int w : g_.neighbors(v))
                if (label_[static_cast<std::size_t>(w)] == kD && static_cast<int>(x.size()) < s) x.push_back(w);
            const Label own = label_[i], other = own == kA ? kB : kA;
            const std::uint32_t all = (1U << s) - 1;
            for (std::uint32_t mask = 0; mask < all; ++mask) {
                const std::size_t branch_mark = trail_.size();
                for (int b = 0; b < s; ++b) assign(x[static_cast<std::size_t>(b)], (mask >> b) & 1U ? other : own);
                if (node(depth + 1)) return true;
                undo_to(branch_mark);
                if (aborted_) break;
            }
            undo_to(mark);
            return false;
        }

        return emit();
    }

    bool emit() {
        const int n = g_.num_vertices();
        Cut cut(n, Side::A);
        for (int v = 0; v < n; ++v)
            if (label_[static_cast<std::size_t>(v)] == kB) cut.set(v, Side::B);
        if (opts_.check_leaves && !is_d_cut(g_, cut, d_))
            throw std::logic_error("branch solver: leaf completion is not a d-cut");
        cut_ = std::move(cut);
        return true;
    }

    const Graph& g_;
    int d_;
    const BranchOptions& opts_;
    SharedBudget& budget_;
    std::vector<Label> label_;
    std::array<std::vector<int>, 2> cnt_;
    std::vector<int> trail_;
    int violations_ = 0;
    bool aborted_ = false;
    Cut cut_;
};

void merge_stats(BranchStats& into, const BranchStats& from) {
    into.nodes_expanded += from.nodes_expanded;
    into.max_depth = std::max(into.max_depth, from.max_depth);
    for (std::size_t r = 0; r < kRuleCount; ++r) into.rule_counts[r] += from.rule_counts[r];
    into.seeds_tried += from.seeds_tried;
}

}  // namespace

BranchResult solve_branching(const Graph& g, int d, const BranchOptions& options) {
    if (d < 1) throw input_error("branch solver: d must be positive");
    if (d > 20) throw input_error("branch solver: d above 20 is not supported");
    BranchResult result;
    const int n = g.num_vertices();
    if (n < 2) return result;

    std::vector<Edge> seeds;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) seeds.emplace_back(u, v);

    SharedBudget budget;
    budget.limit = options.node_budget;
    const int threads = options.deterministic ? 1 : std::max(1, options.threads);

    if (threads == 1) {
        Search search(g, d, options, budget);
        for (auto [u, v] : seeds) {
            ++search.stats.seeds_tried;
            if (search.run_seed(u, v)) {
                result.status = SolveStatus::Yes;
                result.cut = search.cut();
                break;
            }
            if (search.aborted()) break;
        }
        result.stats = search.stats;
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex lock;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                Search search(g, d, options, budget);
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= seeds.size() || budget.stop || budget.exhausted) break;
                    ++search.stats.seeds_tried;
                    if (search.run_seed(seeds[k].first, seeds[k].second)) {
                        std::lock_guard guard(lock);
                        if (result.status != SolveStatus::Yes) {
                            result.status = SolveStatus::Yes;
                            result.cut = search.cut();
                        }
                        budget.stop = true;
                        break;
                    }
                    if (search.aborted()) break;
                }
                std::lock_guard guard(lock);
                merge_stats(result.stats, search.stats);
            });
        for (auto& th : pool) th.join();
    }
    if (result.status != SolveStatus::Yes && budget.exhausted) result.status = SolveStatus::BudgetExceeded;
    return result;
}

double branching_factor(BranchRule rule, int d, double tolerance) {
    if (d < 1) throw input_error("branching_factor: d must be positive");
    if (!(tolerance > 0)) throw input_error("branching_factor: tolerance must be positive");
    const double k = std::ldexp(1.0, d) - 1.0;
    auto f = [&](double x) {
        if (rule == BranchRule::B1) return std::pow(x, d + 1) - k * x - 1.0;
        return std::pow(x, d) - k;
    };
    // f(1) <= 0 < f(2) for both rules.
    double lo = 1.0, hi = 2.0;
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace dcut
