#include "dcut/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>

namespace dcut {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), m_(edges.size()) {
    if (n < 0) throw input_error("graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("graph: edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw input_error("graph: self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& list = adj_[static_cast<std::size_t>(v)];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw input_error("graph: duplicate edge at vertex " + std::to_string(v));
    }
    if (n > 0 && n <= kDenseLimit) {
        mask_.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w : adj_[static_cast<std::size_t>(v)]) mask_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = std::numeric_limits<int>::max();
    for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::has_edge(int u, int v) const {
    if (!mask_.empty()) return (mask_[static_cast<std::size_t>(u)] >> v) & 1U;
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced_subgraph(std::span<const int> vertices) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n_ || index[static_cast<std::size_t>(v)] != -1)
            throw input_error("induced_subgraph: bad or repeated vertex");
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : adj_[static_cast<std::size_t>(vertices[i])]) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) sub.emplace_back(static_cast<int>(i), j);
        }
    return Graph(static_cast<int>(vertices.size()), sub);
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) comp.emplace_back(u, v);
    return Graph(n_, comp);
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw input_error("relabeled: permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(m_);
    for (auto [u, v] : edges()) out.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(n_, out);
}

int GraphBuilder::add_vertices(int count) {
    int first = n_;
    n_ += count;
    return first;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw std::logic_error("GraphBuilder: self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!edges_.emplace(u, v).second)
        throw std::logic_error("GraphBuilder: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
}

bool GraphBuilder::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) != 0;
}

void GraphBuilder::add_clique(std::span<const int> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
}

void GraphBuilder::add_complete_bipartite(std::span<const int> left, std::span<const int> right) {
    for (int u : left)
        for (int v : right) add_edge(u, v);
}

void GraphBuilder::add_matching(std::span<const int> left, std::span<const int> right) {
    if (left.size() != right.size()) throw std::logic_error("GraphBuilder: matching sides differ in size");
    for (std::size_t i = 0; i < left.size(); ++i) add_edge(left[i], right[i]);
}

Graph GraphBuilder::build() const {
    std::vector<Edge> list(edges_.begin(), edges_.end());
    return Graph(n_, list);
}

Cut Cut::from_side_a(int n, std::span<const int> a_side) {
    Cut cut(n, Side::B);
    for (int v : a_side) {
        if (v < 0 || v >= n) throw input_error("cut: vertex out of range");
        cut.set(v, Side::A);
    }
    return cut;
}

Cut Cut::from_string(std::string_view text) {
    std::vector<Side> sides;
    sides.reserve(text.size());
    for (char c : text) {
        if (c == 'A')
            sides.push_back(Side::A);
        else if (c == 'B')
            sides.push_back(Side::B);
        else
            throw input_error(std::string("cut: unexpected side character '") + c + "'");
    }
    return Cut(std::move(sides));
}

int Cut::count(Side s) const { return static_cast<int>(std::count(sides_.begin(), sides_.end(), s)); }

std::vector<int> Cut::vertices_on(Side s) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (side(v) == s) out.push_back(v);
    return out;
}

Cut Cut::swapped() const {
    Cut out = *this;
    for (auto& s : out.sides_) s = opposite(s);
    return out;
}

std::string Cut::to_string() const {
    std::string out;
    out.reserve(sides_.size());
    for (Side s : sides_) out.push_back(s == Side::A ? 'A' : 'B');
    return out;
}

DCutReport verify_cut(const Graph& g, const Cut& cut, int d) {
    if (cut.size() != g.num_vertices())
        throw input_error("verify_cut: cut covers " + std::to_string(cut.size()) + " vertices, graph has " +
                          std::to_string(g.num_vertices()));
    if (d < 1) throw input_error("verify_cut: d must be positive");
    DCutReport report;
    int on_a = cut.count(Side::A);
    report.proper = on_a > 0 && on_a < g.num_vertices();
    std::size_t cross_endpoints = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int cross = 0;
        for (int w : g.neighbors(v))
            if (cut.side(w) != cut.side(v)) ++cross;
        cross_endpoints += static_cast<std::size_t>(cross);
        report.max_cross_degree = std::max(report.max_cross_degree, cross);
        if (cross > d && !report.violating_vertex) report.violating_vertex = v;
    }
    report.crossing_edges = cross_endpoints / 2;
    report.valid = report.proper && report.max_cross_degree <= d;
    return report;
}

std::optional<std::vector<int>> girth_cycle(const Graph& g) {
    const int n = g.num_vertices();
    std::optional<std::vector<int>> best;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    auto path_to_root = [&](int v) {
        std::vector<int> path;
        for (; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
        return path;  // v ... root
    };
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        bool done = false;
        while (!queue.empty() && !done) {
            int u = queue.front();
            queue.pop_front();
            if (best && 2 * dist[static_cast<std::size_t>(u)] + 1 >= static_cast<int>(best->size())) break;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)] && dist[static_cast<std::size_t>(w)] >= dist[static_cast<std::size_t>(u)]) {
                    int length = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best && length >= static_cast<int>(best->size())) continue;
                    auto pu = path_to_root(u);
                    auto pw = path_to_root(w);
                    // The two tree paths must meet only at the root for the closed walk to be a cycle.
                    std::vector<int> su(pu.begin(), pu.end() - 1), sw(pw.begin(), pw.end() - 1);
                    std::sort(su.begin(), su.end());
                    std::sort(sw.begin(), sw.end());
                    std::vector<int> common;
                    std::set_intersection(su.begin(), su.end(), sw.begin(), sw.end(), std::back_inserter(common));
                    if (!common.empty()) continue;
                    std::vector<int> cycle(pu.rbegin(), pu.rend());  // root ... u
                    cycle.insert(cycle.end(), pw.begin(), pw.end() - 1);  // w ... (child of root)
                    best = std::move(cycle);
                    if (best->size() == 3) done = true;
                }
            }
        }
        if (best && best->size() == 3) break;
    }
    return best;
}

LineGraph line_graph(const Graph& g) {
    if (g.num_edges() == 0) throw input_error("line_graph: graph has no edges");
    LineGraph out;
    out.edge_of = g.edges();
    const int n = g.num_vertices();
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < out.edge_of.size(); ++i) {
        incident[static_cast<std::size_t>(out.edge_of[i].first)].push_back(static_cast<int>(i));
        incident[static_cast<std::size_t>(out.edge_of[i].second)].push_back(static_cast<int>(i));
    }
    std::vector<Edge> edges;
    for (const auto& list : incident)
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
    out.graph = Graph(static_cast<int>(out.edge_of.size()), edges);
    return out;
}

namespace {

bool extend_clique(const Graph& g, std::vector<int>& candidates, int needed) {
    if (needed == 0) return true;
    if (static_cast<int>(candidates.size()) < needed) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        int v = candidates[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
        if (extend_clique(g, next, needed - 1)) return true;
    }
    return false;
}

}  // namespace

bool max_clique_at_most(const Graph& g, int d) {
    if (d < 0) return g.num_vertices() == 0;
    std::vector<int> all(static_cast<std::size_t>(g.num_vertices()));
    std::iota(all.begin(), all.end(), 0);
    return !extend_clique(g, all, d + 1);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> members{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head)
            for (int w : g.neighbors(members[head]))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_cluster_graph(const Graph& g) {
    for (const auto& comp : connected_components(g))
        for (int v : comp)
            if (g.degree(v) != static_cast<int>(comp.size()) - 1) return false;
    return true;
}

}  // namespace dcut
