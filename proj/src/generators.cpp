#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dcut/generators.hpp"

namespace dcut {

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle_graph: need at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph star_graph(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder builder(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) builder.add_edge(u, a + v);
    return builder.build();
}

Spool make_spool(int d, int n) {
    if (d < 1 || n < 1) throw input_error("spool: d and n must be positive");
    Spool s;
    if (n == 1) {
        GraphBuilder b(3 * d + 3);
        std::vector<int> inner, outer;
        for (int v = 0; v <= d; ++v) inner.push_back(v);
        for (int v = d + 1; v < 3 * d + 3; ++v) outer.push_back(v);
        b.add_complete_bipartite(inner, outer);
        s.graph = b.build();
        s.interior.push_back(inner);
        s.exterior.push_back(outer);
        return s;
    }
    const int block = 3 * d + 2;
    GraphBuilder b(n * block);
    for (int c = 0; c < n; ++c) {
        const int base = c * block;
        std::vector<int> inner, outer;
        for (int k = 0; k <= d; ++k) inner.push_back(base + 1 + k);
        for (int k = 0; k < 2 * d; ++k) outer.push_back(base + d + 2 + k);
        std::vector<int> q = outer;
        q.push_back(base);
        q.push_back(((c + 1) % n) * block);
        b.add_complete_bipartite(inner, q);
        s.interior.push_back(inner);
        s.exterior.push_back(outer);
        s.interface.push_back(base);
    }
    s.graph = b.build();
    return s;
}

void Hypergraph::validate() const {
    if (n < 0) throw input_error("hypergraph: negative vertex count");
    for (const auto& e : edges) {
        for (int v : e)
            if (v < 0 || v >= n) throw input_error("hypergraph: vertex out of range");
        if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) throw input_error("hypergraph: repeated vertex in an edge");
    }
}

Hypergraph read_hypergraph(std::istream& in) {
    Hypergraph h;
    std::string line;
    bool header = false;
    std::size_t declared = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        auto fail = [&](const std::string& msg) {
            throw input_error("hypergraph line " + std::to_string(lineno) + ": " + msg);
        };
        if (tag == "p") {
            std::string kind;
            long long n = -1, m = -1;
            if (header) fail("duplicate problem line");
            if (!(ls >> kind >> n >> m) || kind != "hyp" || n < 0 || m < 0) fail("expected 'p hyp <n> <m>'");
            h.n = static_cast<int>(n);
            declared = static_cast<std::size_t>(m);
            header = true;
        } else if (tag == "h") {
            if (!header) fail("edge before problem line");
            std::array<int, 3> e{};
            for (int& v : e) {
                if (!(ls >> v)) fail("expected three vertices");
                if (v < 1 || v > h.n) fail("vertex out of range");
                --v;
            }
            std::string extra;
            if (ls >> extra) fail("trailing tokens");
            h.edges.push_back(e);
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    if (!header) throw input_error("hypergraph: missing problem line");
    if (h.edges.size() != declared) throw input_error("hypergraph: edge count differs from the problem line");
    h.validate();
    return h;
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "p hyp " << h.n << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) out << "h " << e[0] + 1 << ' ' << e[1] + 1 << ' ' << e[2] + 1 << '\n';
}

bool is_bicoloring(const Hypergraph& h, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != h.n) return false;
    for (int c : colors)
        if (c != 1 && c != 2) return false;
    for (const auto& e : h.edges) {
        const int c = colors[static_cast<std::size_t>(e[0])];
        if (colors[static_cast<std::size_t>(e[1])] == c && colors[static_cast<std::size_t>(e[2])] == c) return false;
    }
    return true;
}

std::optional<std::vector<int>> bicolor_oracle(const Hypergraph& h, int size_limit) {
    h.validate();
    if (h.n > size_limit || h.n > 62) throw size_limit_error("bicolor_oracle: too many vertices");
    std::vector<int> colors(static_cast<std::size_t>(h.n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.n); ++mask) {
        for (int v = 0; v < h.n; ++v) colors[static_cast<std::size_t>(v)] = (mask >> (h.n - 1 - v) & 1u) ? 2 : 1;
        if (is_bicoloring(h, colors)) return colors;
    }
    return std::nullopt;
}

Chain compose_chain(const std::vector<Graph>& instances, int d) {
    if (instances.empty()) throw input_error("compose_chain: no instances");
    if (d < 1) throw input_error("compose_chain: d must be positive");
    Chain chain;
    int total = 0;
    for (const auto& g : instances) {
        if (g.num_vertices() == 0) throw input_error("compose_chain: empty instance");
        chain.offsets.push_back(total);
        chain.chosen.push_back(total);
        total += g.num_vertices();
    }
    GraphBuilder b(total);
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (auto [u, v] : instances[i].edges()) b.add_edge(chain.offsets[i] + u, chain.offsets[i] + v);
    for (std::size_t i = 0; i + 1 < instances.size(); ++i) {
        const int first = b.add_vertices(2 * d);
        std::vector<int> clique;
        for (int k = 0; k < 2 * d; ++k) clique.push_back(first + k);
        b.add_clique(clique);
        for (int x : clique) {
            b.add_edge(x, chain.chosen[i]);
            b.add_edge(x, chain.chosen[i + 1]);
        }
        chain.bridges.push_back(std::move(clique));
    }
    chain.graph = b.build();
    return chain;
}

std::string chain_to_json(const Chain& chain) {
    nlohmann::json j;
    j["offsets"] = chain.offsets;
    j["chosen"] = chain.chosen;
    j["bridges"] = chain.bridges;
    return j.dump(2);
}

namespace {

// Small graphs as adjacency bitmasks, canonised by minimising the upper-triangle code over
// the relabellings that respect a colour refinement.
using Adj = std::vector<std::uint32_t>;

std::vector<int> refine_colors(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = __builtin_popcount(adj[static_cast<std::size_t>(v)]);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<std::size_t>(v)]};
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (adj[static_cast<std::size_t>(v)] >> w & 1u) nb.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[static_cast<std::size_t>(v)] = {s, v};
        }
        std::vector<std::vector<int>> distinct;
        for (const auto& p : sig) distinct.push_back(p.first);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)].first) - distinct.begin());
        std::set<int> before(color.begin(), color.end()), after(next.begin(), next.end());
        color = next;
        if (after.size() == before.size()) return color;
    }
}

std::uint64_t code_of(const Adj& adj, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    std::uint64_t code = 0;
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (adj[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])] >> order[static_cast<std::size_t>(b)] & 1u)
                code |= std::uint64_t{1} << bit;
    return code;
}

std::uint64_t canonical_code(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color = refine_colors(adj);
    std::vector<std::vector<int>> cells;
    std::vector<int> by_color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_color[static_cast<std::size_t>(v)] = v;
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](int a, int b) { return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)]; });
    for (int v : by_color) {
        if (cells.empty() || color[static_cast<std::size_t>(cells.back().front())] != color[static_cast<std::size_t>(v)])
            cells.emplace_back();
        cells.back().push_back(v);
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> order;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            best = std::min(best, code_of(adj, order));
            return;
        }
        std::vector<int> cell = cells[c];
        do {
            order.insert(order.end(), cell.begin(), cell.end());
            rec(c + 1);
            order.resize(order.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    GraphBuilder b(n);
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c, ++bit)
            if (code >> bit & 1u) b.add_edge(a, c);
    return b.build();
}

Adj adj_from_code(int n, std::uint64_t code) {
    Adj adj(static_cast<std::size_t>(n), 0);
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c, ++bit)
            if (code >> bit & 1u) {
                adj[static_cast<std::size_t>(a)] |= 1u << c;
                adj[static_cast<std::size_t>(c)] |= 1u << a;
            }
    return adj;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 0 || n > 8) throw size_limit_error("nonisomorphic_graphs: n must be in [0, 8]");
    std::set<std::uint64_t> codes{0};
    for (int k = 1; k < n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : codes) {
            Adj base = adj_from_code(k, code);
            for (std::uint32_t nb = 0; nb < (1u << k); ++nb) {
                Adj adj = base;
                adj.push_back(nb);
                for (int v = 0; v < k; ++v)
                    if (nb >> v & 1u) adj[static_cast<std::size_t>(v)] |= 1u << k;
                next.insert(canonical_code(adj));
            }
        }
        codes = std::move(next);
    }
    std::vector<Graph> out;
    for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
    return out;
}

std::vector<Graph> connected_nonisomorphic_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : nonisomorphic_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace dcut
