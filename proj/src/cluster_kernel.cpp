#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "dcut/cluster_kernel.hpp"

namespace dcut {

std::string_view to_string(KernelStatus s) {
    return s == KernelStatus::Reduced ? "REDUCED" : "YES_BY_RULE_1";
}

namespace {

struct Snapshot {
    Graph graph;
    Modulator mod;
    std::vector<int> ids;  // compact -> working
};

class Work {
public:
    Work(const Graph& g, int d, const std::vector<int>& u) : d_(d) {
        const auto n = static_cast<std::size_t>(g.num_vertices());
        adj_.resize(n);
        alive_.assign(n, 1);
        for (auto [a, b] : g.edges()) {
            adj_[static_cast<std::size_t>(a)].insert(b);
            adj_[static_cast<std::size_t>(b)].insert(a);
        }
        Modulator m = Modulator::singletons(u);
        parts_ = m.parts;
        xs_ = m.private_cliques;
    }

    Snapshot snapshot() const {
        Snapshot s;
        std::vector<int> compact(adj_.size(), -1);
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (alive_[v]) {
                compact[v] = static_cast<int>(s.ids.size());
                s.ids.push_back(static_cast<int>(v));
            }
        std::vector<Edge> edges;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if (alive_[v])
                for (int w : adj_[v])
                    if (static_cast<std::size_t>(w) > v) edges.emplace_back(compact[v], compact[static_cast<std::size_t>(w)]);
        s.graph = Graph(static_cast<int>(s.ids.size()), edges);
        auto map_all = [&](const std::vector<int>& vs) {
            std::vector<int> out;
            for (int v : vs) out.push_back(compact[static_cast<std::size_t>(v)]);
            return out;
        };
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            s.mod.parts.push_back(map_all(parts_[i]));
            s.mod.private_cliques.push_back(map_all(xs_[i]));
        }
        return s;
    }

    void remove_vertex(TraceRecord& rec, int v) {
        for (int w : adj_[static_cast<std::size_t>(v)]) adj_[static_cast<std::size_t>(w)].erase(v);
        adj_[static_cast<std::size_t>(v)].clear();
        alive_[static_cast<std::size_t>(v)] = 0;
        rec.removed_vertices.push_back(v);
    }

    int add_vertex(TraceRecord& rec) {
        adj_.emplace_back();
        alive_.push_back(1);
        int v = static_cast<int>(adj_.size()) - 1;
        rec.added_vertices.push_back(v);
        return v;
    }

    void add_edge(TraceRecord& rec, int a, int b) {
        adj_[static_cast<std::size_t>(a)].insert(b);
        adj_[static_cast<std::size_t>(b)].insert(a);
        rec.added_edges.emplace_back(std::min(a, b), std::max(a, b));
    }

    void remove_edge(TraceRecord& rec, int a, int b) {
        adj_[static_cast<std::size_t>(a)].erase(b);
        adj_[static_cast<std::size_t>(b)].erase(a);
        rec.removed_edges.emplace_back(std::min(a, b), std::max(a, b));
    }

    bool has_edge(int a, int b) const { return adj_[static_cast<std::size_t>(a)].count(b) > 0; }

    // Parts i and j (working ids); the survivor is min(i, j).
    TraceRecord merge(int rule, int i, int j) {
        if (i > j) std::swap(i, j);
        TraceRecord rec;
        rec.rule = rule;
        rec.parts = {i, j};
        for (int k : {i, j}) {
            for (int x : xs_[static_cast<std::size_t>(k)]) remove_vertex(rec, x);
            xs_[static_cast<std::size_t>(k)].clear();
        }
        auto& pi = parts_[static_cast<std::size_t>(i)];
        auto& pj = parts_[static_cast<std::size_t>(j)];
        pi.insert(pi.end(), pj.begin(), pj.end());
        std::sort(pi.begin(), pi.end());
        pj.clear();
        std::vector<int> fresh;
        for (int k = 0; k < 2 * d_; ++k) fresh.push_back(add_vertex(rec));
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = a + 1; b < fresh.size(); ++b) add_edge(rec, fresh[a], fresh[b]);
        for (int x : fresh)
            for (int u : pi) add_edge(rec, x, u);
        xs_[static_cast<std::size_t>(i)] = fresh;
        return rec;
    }

    int total_modulator() const {
        int total = 0;
        for (const auto& p : parts_) total += static_cast<int>(p.size());
        return total;
    }

    std::vector<std::vector<int>> parts_;
    std::vector<std::vector<int>> xs_;

private:
    int d_;
    std::vector<std::set<int>> adj_;
    std::vector<char> alive_;
};

std::vector<int> to_working(const std::vector<int>& vs, const std::vector<int>& ids) {
    std::vector<int> out;
    for (int v : vs) out.push_back(ids[static_cast<std::size_t>(v)]);
    return out;
}

std::optional<Cut> rule1(const Graph& g, const ClusterView& view, int d) {
    const int n = g.num_vertices();
    for (const auto& c : view.clusters) {
        if (static_cast<int>(c.vertices.size()) < n) {
            Cut cut = Cut::from_side_a(n, c.vertices);
            if (is_d_cut(g, cut, d)) return cut;
        }
        if (static_cast<int>(c.vertices.size()) > 2 * d) continue;
        const std::uint32_t full = (1u << c.vertices.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::vector<int> side;
            for (std::size_t k = 0; k < c.vertices.size(); ++k)
                if (mask >> k & 1u) side.push_back(c.vertices[k]);
            if (static_cast<int>(side.size()) == n) continue;
            Cut cut = Cut::from_side_a(n, side);
            if (is_d_cut(g, cut, d)) return cut;
        }
    }
    return std::nullopt;
}

bool subset_of(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace

KernelResult kernelize(const Graph& g, int d, const std::optional<std::vector<int>>& modulator,
                       const KernelOptions& options) {
    if (d < 1) throw input_error("kernelize: d must be at least 1");
    std::vector<int> u;
    if (modulator) {
        u = *modulator;
        std::sort(u.begin(), u.end());
        if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw input_error("kernelize: repeated modulator vertex");
        for (int v : u)
            if (v < 0 || v >= g.num_vertices()) throw input_error("kernelize: modulator vertex out of range");
        std::vector<int> rest;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!std::binary_search(u.begin(), u.end(), v)) rest.push_back(v);
        if (!is_cluster_graph(g.induced_subgraph(rest))) throw input_error("kernelize: G - U is not a cluster graph");
    } else {
        u = find_cluster_modulator(g, options.approx_modulator);
    }

    KernelResult result;
    ReductionTrace& trace = result.trace;
    trace.d = d;
    trace.input_vertices = g.num_vertices();
    trace.modulator = u;

    Work work(g, d, u);
    for (;;) {
        Snapshot snap = work.snapshot();
        const Graph& cur = snap.graph;
        ClusterView view = analyze_clusters(cur, snap.mod, d);
        const auto& parts = snap.mod.parts;
        const int t = static_cast<int>(parts.size());

        if (auto cut = rule1(cur, view, d)) {
            trace.status = KernelStatus::YesByRule1;
            trace.witness_vertices = snap.ids;
            trace.witness_sides = cut->to_string();
            result.status = KernelStatus::YesByRule1;
            result.rule1_graph = cur;
            result.rule1_witness = *cut;
            result.graph = Graph(2);
            result.net_vertices = 2;
            return result;
        }

        std::vector<std::vector<int>> n2d;
        for (int i = 0; i < t; ++i) n2d.push_back(compute_n2d(cur, snap.mod, i, d));

        // Rule 2
        bool applied = false;
        for (int i = 0; i < t && !applied; ++i)
            for (int j = i + 1; j < t && !applied; ++j)
                if (!parts[static_cast<std::size_t>(i)].empty() && !parts[static_cast<std::size_t>(j)].empty() &&
                    intersects(n2d[static_cast<std::size_t>(i)], n2d[static_cast<std::size_t>(j)])) {
                    trace.records.push_back(work.merge(2, i, j));
                    applied = true;
                }
        if (applied) continue;

        // Rule 3
        std::vector<int> part_of(static_cast<std::size_t>(cur.num_vertices()), -1);
        for (int i = 0; i < t; ++i)
            for (int v : parts[static_cast<std::size_t>(i)]) part_of[static_cast<std::size_t>(v)] = i;
        std::vector<int> uv = snap.mod.vertices();
        for (std::size_t a = 0; a < uv.size() && !applied; ++a)
            for (std::size_t b = a + 1; b < uv.size() && !applied; ++b) {
                int pa = part_of[static_cast<std::size_t>(uv[a])], pb = part_of[static_cast<std::size_t>(uv[b])];
                if (pa == pb) continue;
                int common = 0;
                for (int w : cur.neighbors(uv[a])) common += cur.has_edge(w, uv[b]);
                if (common >= 2 * d + 1) {
                    trace.records.push_back(work.merge(3, pa, pb));
                    applied = true;
                }
            }
        if (applied) continue;

        // Rule 4
        for (int i = 0; i < t && !applied; ++i) {
            std::vector<const ClusterInfo*> inside;
            for (const auto& c : view.clusters)
                if (subset_of(c.vertices, n2d[static_cast<std::size_t>(i)])) inside.push_back(&c);
            if (inside.size() < 2) continue;
            TraceRecord rec;
            rec.rule = 4;
            rec.parts = {i};
            auto c1 = to_working(inside[0]->vertices, snap.ids);
            auto c2 = to_working(inside[1]->vertices, snap.ids);
            for (int a : c1)
                for (int b : c2) work.add_edge(rec, a, b);
            rec.cluster = c1;
            rec.cluster.insert(rec.cluster.end(), c2.begin(), c2.end());
            std::sort(rec.cluster.begin(), rec.cluster.end());
            trace.records.push_back(std::move(rec));
            applied = true;
        }
        if (applied) continue;

        // Rule 5
        for (const auto& c : view.clusters) {
            if (static_cast<int>(c.vertices.size()) < 2 * d + 2) continue;
            for (std::size_t k = 0; k < c.vertices.size(); ++k)
                if (c.part_of_vertex[k] == -1) {
                    TraceRecord rec;
                    rec.rule = 5;
                    rec.cluster = to_working(c.vertices, snap.ids);
                    work.remove_vertex(rec, snap.ids[static_cast<std::size_t>(c.vertices[k])]);
                    trace.records.push_back(std::move(rec));
                    applied = true;
                    break;
                }
            if (applied) break;
        }
        if (applied) continue;

        // Rule 6
        for (const auto& c : view.clusters) {
            if (static_cast<int>(c.vertices.size()) < 2 * d + 1) continue;
            for (int i = 0; i < t && !applied; ++i) {
                const auto& part = parts[static_cast<std::size_t>(i)];
                if (part.empty() || !subset_of(c.vertices, n2d[static_cast<std::size_t>(i)])) continue;
                std::set<Edge> target;
                for (int k = 0; k <= d; ++k) target.emplace(part.front(), c.vertices[static_cast<std::size_t>(k)]);
                std::set<Edge> present;
                for (int pu : part)
                    for (int v : c.vertices)
                        if (cur.has_edge(pu, v)) present.emplace(pu, v);
                if (present == target) continue;
                TraceRecord rec;
                rec.rule = 6;
                rec.parts = {i};
                rec.cluster = to_working(c.vertices, snap.ids);
                for (const auto& [a, b] : present)
                    if (!target.count({a, b}))
                        work.remove_edge(rec, snap.ids[static_cast<std::size_t>(a)], snap.ids[static_cast<std::size_t>(b)]);
                for (const auto& [a, b] : target)
                    if (!present.count({a, b}))
                        work.add_edge(rec, snap.ids[static_cast<std::size_t>(a)], snap.ids[static_cast<std::size_t>(b)]);
                trace.records.push_back(std::move(rec));
                applied = true;
            }
            if (applied) break;
        }
        if (applied) continue;

        // Rule 7
        for (const auto& c : view.clusters) {
            if (!c.simple || static_cast<int>(c.vertices.size()) > d + 1) continue;
            TraceRecord rec;
            rec.rule = 7;
            rec.cluster = to_working(c.vertices, snap.ids);
            for (int v : rec.cluster) work.remove_vertex(rec, v);
            trace.records.push_back(std::move(rec));
            applied = true;
            break;
        }
        if (applied) continue;

        // Rule 8
        const std::size_t keep = static_cast<std::size_t>(d * work.total_modulator() + 1);
        std::map<std::vector<int>, std::vector<const ClusterInfo*>> patterns;
        for (const auto& c : view.clusters) {
            const int size = static_cast<int>(c.vertices.size());
            if (!c.simple || size < d + 2 || size > 2 * d) continue;
            std::vector<int> key = c.part_of_vertex;
            std::sort(key.begin(), key.end());
            key.insert(key.begin(), size);
            patterns[key].push_back(&c);
        }
        for (auto& [key, members] : patterns) {
            if (members.size() <= keep) continue;
            TraceRecord rec;
            rec.rule = 8;
            for (std::size_t k = keep; k < members.size(); ++k) {
                auto cv = to_working(members[k]->vertices, snap.ids);
                rec.cluster.insert(rec.cluster.end(), cv.begin(), cv.end());
                for (int v : cv) work.remove_vertex(rec, v);
            }
            std::sort(rec.cluster.begin(), rec.cluster.end());
            trace.records.push_back(std::move(rec));
            applied = true;
            break;
        }
        if (applied) continue;

        // Fixpoint.
        result.status = KernelStatus::Reduced;
        result.graph = cur;
        result.modulator = snap.mod;
        trace.output_map = snap.ids;
        for (const auto& c : view.clusters) {
            bool isolated = true;
            for (int p : c.part_of_vertex) isolated = isolated && p == -1;
            if (isolated) {
                std::string flag = "u_isolated_cluster:";
                auto cv = to_working(c.vertices, snap.ids);
                for (std::size_t k = 0; k < cv.size(); ++k) flag += (k ? "," : "") + std::to_string(cv[k]);
                trace.flags.push_back(flag);
            }
        }
        result.net_vertices = cur.num_vertices() - static_cast<int>(snap.mod.private_clique_vertices());
        return result;
    }
}

double kernel_size_bound(int d, int u) {
    const double dd = d;
    const double uu = std::max(1, u);
    const double ambiguous = 2 * dd * uu * (uu - 1) / 2;
    double bound = uu + dd * uu;
    bound += uu * std::max(2 * dd + 1, dd + 1 + dd * uu);
    bound += ambiguous * (std::max(2 * dd + 1, dd * uu) + 2 * dd);
    for (int s = d + 2; s <= 2 * d; ++s) bound += std::pow(uu + 1, s) * (dd * uu + 1) * s;
    return bound;
}

}  // namespace dcut
