#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "dcut/generators.hpp"

namespace dcut {

std::string label(const std::string& name, std::initializer_list<int> args) {
    std::string out = name + "(";
    bool first = true;
    for (int a : args) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
    }
    return out + ")";
}

namespace {

std::string star_label(const std::string& name, int v, int i) {
    return name + "(" + std::to_string(v) + "*," + std::to_string(i) + ")";
}

}  // namespace

const std::vector<int>& ReductionMap::set(const std::string& key) const {
    auto it = sets.find(key);
    if (it == sets.end()) throw std::out_of_range("reduction map: no set " + key);
    return it->second;
}

int ReductionMap::vertex(const std::string& key) const {
    auto it = vertices.find(key);
    if (it == vertices.end()) throw std::out_of_range("reduction map: no vertex " + key);
    return it->second;
}

namespace {

class Builder {
public:
    explicit Builder(int d) : d_(d) {}

    // Appends a spool; returns its exterior sets in global ids.
    std::vector<std::vector<int>> add_spool(int copies, std::pair<int, int>& range) {
        Spool s = make_spool(d_, copies);
        const int offset = b_.add_vertices(s.graph.num_vertices());
        range = {offset, offset + s.graph.num_vertices()};
        for (auto [u, v] : s.graph.edges()) b_.add_edge(offset + u, offset + v);
        auto ext = s.exterior;
        for (auto& set : ext)
            for (int& v : set) v += offset;
        return ext;
    }

    int add_vertex() { return b_.add_vertex(); }
    void edge(int u, int v) { b_.add_edge(u, v); }
    void join(const std::vector<int>& a, const std::vector<int>& c) {
        for (int u : a)
            for (int v : c) b_.add_edge(u, v);
    }
    void join(int u, const std::vector<int>& c) {
        for (int v : c) b_.add_edge(u, v);
    }
    void matching(const std::vector<int>& a, const std::vector<int>& c) {
        if (a.size() != c.size()) throw std::logic_error("hardness_reduce: matching between unequal sets");
        b_.add_matching(a, c);
    }
    void clique(const std::vector<int>& a) { b_.add_clique(a); }
    Graph build() const { return b_.build(); }

private:
    int d_;
    GraphBuilder b_;
};

std::vector<int> half(const std::vector<int>& set, int l) {
    const auto mid = set.begin() + static_cast<std::ptrdiff_t>(set.size() / 2);
    return l == 1 ? std::vector<int>(set.begin(), mid) : std::vector<int>(mid, set.end());
}

std::vector<int> without_first(const std::vector<int>& set) { return std::vector<int>(set.begin() + 1, set.end()); }

}  // namespace

Reduction hardness_reduce(const Hypergraph& h, int d) {
    h.validate();
    if (d < 1) throw input_error("hardness_reduce: d must be positive");
    if (h.edges.empty()) throw input_error("hardness_reduce: hypergraph has no edges");
    const int m = static_cast<int>(h.edges.size());
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(h.n));
    std::vector<std::array<int, 3>> edges;
    for (int e = 0; e < m; ++e) {
        auto sorted = h.edges[static_cast<std::size_t>(e)];
        std::sort(sorted.begin(), sorted.end());
        edges.push_back(sorted);
        for (int v : sorted) incident[static_cast<std::size_t>(v)].push_back(e);
    }
    std::vector<int> kept;
    for (int v = 0; v < h.n; ++v)
        if (!incident[static_cast<std::size_t>(v)].empty()) kept.push_back(v);

    Reduction out;
    ReductionMap& map = out.map;
    map.d = d;
    map.vertex_gadget.assign(static_cast<std::size_t>(h.n), {-1, -1});
    Builder b(d);

    // Vertex gadgets: copy 0 carries S(v*), then S(v,e,i,j) by edge, i, j.
    for (int v : kept) {
        const auto& inc = incident[static_cast<std::size_t>(v)];
        auto ext = b.add_spool(4 * static_cast<int>(inc.size()) + 1, map.vertex_gadget[static_cast<std::size_t>(v)]);
        for (int i = 1; i <= 2; ++i) {
            auto s = half(ext[0], i);
            map.sets[star_label("S", v, i)] = s;
            map.vertices[star_label("s", v, i)] = s.front();
        }
        std::size_t copy = 1;
        for (int e : inc)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j, ++copy) {
                    const auto& set = ext[copy];
                    map.sets[label("S_1", {v, e, i, j})] = half(set, 1);
                    map.sets[label("S_2", {v, e, i, j})] = half(set, 2);
                    b.join(half(set, 1), half(set, 2));
                }
        b.matching(without_first(map.set(star_label("S", v, 1))), without_first(map.set(star_label("S", v, 2))));
    }

    // Colour gadgets: C(v,i) for kept v, then C(e,i,j).
    const int copies = static_cast<int>(kept.size()) + 2 * m;
    for (int i = 1; i <= 2; ++i) {
        auto ext = b.add_spool(copies, map.color_gadget[i - 1]);
        std::size_t copy = 0;
        for (int v : kept) {
            const auto& set = ext[copy++];
            for (int l = 1; l <= 2; ++l) {
                auto part = half(set, l);
                map.sets[label("C_" + std::to_string(l), {v, i})] = part;
                map.vertices[label("c_" + std::to_string(l), {v, i})] = part.front();
                b.join(part.front(), without_first(part));
            }
            b.edge(half(set, 1).front(), half(set, 2).front());
        }
        for (int e = 0; e < m; ++e)
            for (int j = 1; j <= 2; ++j) {
                const auto& set = ext[copy++];
                for (int l = 1; l <= 2; ++l) {
                    auto part = half(set, l);
                    map.sets[label("C_" + std::to_string(l), {e, i, j})] = part;
                    map.vertices[label("c_" + std::to_string(l), {e, i, j})] = part.front();
                    b.clique(without_first(part));
                }
            }
        for (int e = 0; e < m; ++e) {
            std::vector<std::vector<int>> rests;
            for (int j = 1; j <= 2; ++j)
                for (int l = 1; l <= 2; ++l) rests.push_back(without_first(map.set(label("C_" + std::to_string(l), {e, i, j}))));
            for (std::size_t a = 0; a < rests.size(); ++a)
                for (std::size_t c = a + 1; c < rests.size(); ++c) b.matching(rests[a], rests[c]);
        }
    }
    for (int v : kept)
        b.join(without_first(map.set(label("C_1", {v, 2}))), without_first(map.set(label("C_2", {v, 1}))));

    // Vertex gadgets meet colour gadgets.
    for (int v : kept)
        for (int i = 1; i <= 2; ++i) {
            const int s = map.vertex(star_label("s", v, i));
            const auto rest = without_first(map.set(star_label("S", v, i)));
            const auto& own = map.set(label("C_" + std::to_string(i), {v, i}));
            b.join(s, own);
            b.join(rest, without_first(own));
            b.matching(rest, without_first(map.set(label("C_" + std::to_string(3 - i), {v, i}))));
            b.edge(s, map.vertex(label("c_" + std::to_string(i), {v, 3 - i})));
        }

    // Hyperedge gadgets.
    int first_extra = -1;
    for (int e = 0; e < m; ++e) {
        const auto [x, y, z] = edges[static_cast<std::size_t>(e)];
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                int primed[2];
                for (int l = 1; l <= 2; ++l) {
                    const std::string ls = std::to_string(l);
                    const int c = map.vertex(label("c_" + ls, {e, i, j}));
                    const int cp = b.add_vertex();
                    if (first_extra < 0) first_extra = cp;
                    primed[l - 1] = cp;
                    map.vertices[label("c'_" + ls, {e, i, j})] = cp;
                    b.edge(cp, c);
                    b.join(cp, map.set(label("S_" + ls, {x, e, i, j})));
                    b.join(cp, map.set(label("S_" + ls, {y, e, i, j})));
                    b.join(c, map.set(label("S_" + ls, {z, e, i, j})));
                }
                b.edge(primed[0], primed[1]);
            }
    }

    out.graph = b.build();
    map.hyperedge_vertices = {first_extra, out.graph.num_vertices()};
    for (int v = 0; v < out.graph.num_vertices(); ++v)
        if (out.graph.degree(v) != 2 * d + 2)
            throw std::logic_error("hardness_reduce: vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(out.graph.degree(v)) + ", expected " + std::to_string(2 * d + 2));
    return out;
}

Cut bicoloring_to_cut(const Hypergraph& h, const std::vector<int>& colors, const Reduction& reduction) {
    if (!is_bicoloring(h, colors)) throw input_error("bicoloring_to_cut: not a valid bicoloring");
    const ReductionMap& map = reduction.map;
    const Graph& g = reduction.graph;
    Cut cut(g.num_vertices());
    auto place = [&](std::pair<int, int> range, Side s) {
        for (int v = range.first; v < range.second; ++v) cut.set(v, s);
    };
    place(map.color_gadget[0], Side::A);
    place(map.color_gadget[1], Side::B);
    for (int v = 0; v < h.n; ++v)
        if (map.vertex_gadget[static_cast<std::size_t>(v)].first >= 0)
            place(map.vertex_gadget[static_cast<std::size_t>(v)], colors[static_cast<std::size_t>(v)] == 1 ? Side::A : Side::B);
    // Each c' follows the majority of its 2d+1 neighbours other than its twin.
    for (int v = map.hyperedge_vertices.first; v < map.hyperedge_vertices.second; ++v) {
        int on_a = 0, total = 0;
        for (int w : g.neighbors(v)) {
            if (w >= map.hyperedge_vertices.first) continue;
            ++total;
            on_a += cut.side(w) == Side::A;
        }
        cut.set(v, 2 * on_a > total ? Side::A : Side::B);
    }
    return cut;
}

std::string reduction_map_to_json(const ReductionMap& map) {
    nlohmann::json j;
    j["d"] = map.d;
    j["vertex_gadgets"] = nlohmann::json::array();
    for (auto [a, b] : map.vertex_gadget) j["vertex_gadgets"].push_back({a, b});
    j["color_gadgets"] = {{map.color_gadget[0].first, map.color_gadget[0].second},
                          {map.color_gadget[1].first, map.color_gadget[1].second}};
    j["hyperedge_vertices"] = {map.hyperedge_vertices.first, map.hyperedge_vertices.second};
    j["sets"] = map.sets;
    j["vertices"] = map.vertices;
    return j.dump(2);
}

}  // namespace dcut
