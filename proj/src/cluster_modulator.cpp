#include <algorithm>
#include <functional>

#include "dcut/cluster_kernel.hpp"

namespace dcut {

std::optional<std::array<int, 3>> find_induced_p3(const Graph& g) {
    for (int b = 0; b < g.num_vertices(); ++b) {
        auto nb = g.neighbors(b);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) return std::array<int, 3>{nb[i], b, nb[j]};
    }
    return std::nullopt;
}

namespace {

// Lowest induced P3 avoiding `removed`.
std::optional<std::array<int, 3>> p3_avoiding(const Graph& g, const std::vector<char>& removed) {
    for (int b = 0; b < g.num_vertices(); ++b) {
        if (removed[static_cast<std::size_t>(b)]) continue;
        std::vector<int> nb;
        for (int w : g.neighbors(b))
            if (!removed[static_cast<std::size_t>(w)]) nb.push_back(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) return std::array<int, 3>{nb[i], b, nb[j]};
    }
    return std::nullopt;
}

bool branch(const Graph& g, std::vector<char>& removed, int budget) {
    auto p3 = p3_avoiding(g, removed);
    if (!p3) return true;
    if (budget == 0) return false;
    for (int v : *p3) {
        removed[static_cast<std::size_t>(v)] = 1;
        if (branch(g, removed, budget - 1)) return true;
        removed[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

std::vector<int> collect(const std::vector<char>& removed) {
    std::vector<int> out;
    for (std::size_t v = 0; v < removed.size(); ++v)
        if (removed[v]) out.push_back(static_cast<int>(v));
    return out;
}

}  // namespace

std::vector<int> find_cluster_modulator(const Graph& g, bool approx) {
    std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
    if (approx) {
        while (auto p3 = p3_avoiding(g, removed))
            for (int v : *p3) removed[static_cast<std::size_t>(v)] = 1;
        return collect(removed);
    }
    for (int k = 0;; ++k)
        if (branch(g, removed, k)) return collect(removed);
}

Modulator Modulator::singletons(const std::vector<int>& u) {
    Modulator mod;
    for (int v : u) {
        mod.parts.push_back({v});
        mod.private_cliques.emplace_back();
    }
    return mod;
}

std::vector<int> Modulator::vertices() const {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Modulator::size() const {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    return total;
}

std::size_t Modulator::private_clique_vertices() const {
    std::size_t total = 0;
    for (const auto& x : private_cliques) total += x.size();
    return total;
}

namespace {

struct Layout {
    std::vector<int> part;  // part index, -1 outside U
    std::vector<char> in_x;
    std::vector<std::vector<int>> clusters;
};

Layout layout(const Graph& g, const Modulator& mod) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    Layout out;
    out.part.assign(n, -1);
    out.in_x.assign(n, 0);
    for (std::size_t i = 0; i < mod.parts.size(); ++i)
        for (int v : mod.parts[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw input_error("modulator: vertex out of range");
            if (out.part[static_cast<std::size_t>(v)] != -1) throw input_error("modulator: parts overlap");
            out.part[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (const auto& x : mod.private_cliques)
        for (int v : x) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw input_error("modulator: clique vertex out of range");
            out.in_x[static_cast<std::size_t>(v)] = 1;
        }
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || out.part[s] != -1 || out.in_x[s]) continue;
        std::vector<int> members{static_cast<int>(s)};
        seen[s] = 1;
        for (std::size_t h = 0; h < members.size(); ++h)
            for (int w : g.neighbors(members[h])) {
                auto wi = static_cast<std::size_t>(w);
                if (!seen[wi] && out.part[wi] == -1 && !out.in_x[wi]) {
                    seen[wi] = 1;
                    members.push_back(w);
                }
            }
        std::sort(members.begin(), members.end());
        out.clusters.push_back(std::move(members));
    }
    return out;
}

std::vector<int> n2d_of(const Graph& g, const Modulator& mod, const Layout& lay, int i, int d) {
    std::vector<int> out;
    const auto& part = mod.parts[static_cast<std::size_t>(i)];
    for (const auto& c : lay.clusters) {
        const int size = static_cast<int>(c.size());
        std::vector<int> hits;
        bool whole = false;
        for (int v : c) {
            int k = 0;
            for (int w : g.neighbors(v)) k += lay.part[static_cast<std::size_t>(w)] == i;
            if (k >= d + 1) {
                hits.push_back(v);
                if (size >= 2 * d + 1) whole = true;
            }
        }
        for (int u : part) {
            int k = 0;
            for (int w : g.neighbors(u)) k += std::binary_search(c.begin(), c.end(), w);
            if (k >= 2 * d || (size >= 2 * d + 1 && k >= d + 1)) whole = true;
        }
        if (whole)
            out.insert(out.end(), c.begin(), c.end());
        else
            out.insert(out.end(), hits.begin(), hits.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<int> compute_n2d(const Graph& g, const Modulator& mod, int i, int d) {
    if (i < 0 || static_cast<std::size_t>(i) >= mod.parts.size()) throw input_error("compute_n2d: part index out of range");
    return n2d_of(g, mod, layout(g, mod), i, d);
}

ClusterView analyze_clusters(const Graph& g, const Modulator& mod, int d) {
    Layout lay = layout(g, mod);
    std::vector<std::vector<int>> n2d;
    for (std::size_t i = 0; i < mod.parts.size(); ++i) n2d.push_back(n2d_of(g, mod, lay, static_cast<int>(i), d));
    ClusterView view;
    for (auto& c : lay.clusters) {
        ClusterInfo info;
        info.small = static_cast<int>(c.size()) <= 2 * d;
        info.big = !info.small;
        for (int v : c) {
            int seen = -1;
            for (int w : g.neighbors(v)) {
                int p = lay.part[static_cast<std::size_t>(w)];
                if (p == -1) continue;
                if (seen == -1)
                    seen = p;
                else if (seen != p)
                    seen = -2;
                if (seen == -2) break;
            }
            info.part_of_vertex.push_back(seen);
            if (seen == -2) info.ambiguous = true;
        }
        info.simple = !info.ambiguous;
        for (const auto& set : n2d)
            if (std::includes(set.begin(), set.end(), c.begin(), c.end())) info.fixed = true;
        info.vertices = std::move(c);
        view.clusters.push_back(std::move(info));
    }
    return view;
}

}  // namespace dcut
