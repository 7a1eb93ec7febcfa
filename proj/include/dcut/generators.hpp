#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

/*
 * (d, n)-spool. Copy c occupies ids [c(3d+2), (c+1)(3d+2)): first its left
 * interface vertex (shared with the previous copy), then d+1 interior
 * vertices, then 2d exterior vertices. A single copy is a plain K_{d+1,2d+2}
 * with 2d+2 exterior vertices.
 */
struct Spool {
    Graph graph;
    std::vector<std::vector<int>> interior;
    std::vector<std::vector<int>> exterior;
    /// interface[c] is shared by copies c-1 and c (cyclically). Empty for n = 1.
    std::vector<int> interface;
};

Spool make_spool(int d, int n);
inline Graph spool(int d, int n) { return make_spool(d, n).graph; }

struct Hypergraph {
    int n = 0;
    std::vector<std::array<int, 3>> edges;

    /// Throws input_error unless every edge has three distinct in-range vertices.
    void validate() const;
};

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// colors[v] in {1, 2}.
bool is_bicoloring(const Hypergraph& h, const std::vector<int>& colors);

/// First bicoloring in order of the colour string read as a binary number (vertex 0 most significant).
std::optional<std::vector<int>> bicolor_oracle(const Hypergraph& h, int size_limit = 26);

/*
 * Vertex registry of the regular reduction. Hypergraph vertices and edges
 * are 0-indexed; colours i, redundancy j and halves l are 1 or 2. Set labels:
 * "S(v*,i)", "S_l(v,e,i,j)", "C_l(v,i)", "C_l(e,i,j)". Vertex labels:
 * "s(v*,i)", "c_l(v,i)", "c_l(e,i,j)", "c'_l(e,i,j)".
 */
struct ReductionMap {
    int d = 1;
    /// Per hypergraph vertex, [first, last) of its spool; {-1, -1} for isolated vertices, which get no gadget.
    std::vector<std::pair<int, int>> vertex_gadget;
    std::pair<int, int> color_gadget[2];
    std::pair<int, int> hyperedge_vertices;
    std::map<std::string, std::vector<int>> sets;
    std::map<std::string, int> vertices;

    const std::vector<int>& set(const std::string& label) const;
    int vertex(const std::string& label) const;
};

std::string label(const std::string& name, std::initializer_list<int> args);

struct Reduction {
    Graph graph;
    ReductionMap map;
};

/// Throws std::logic_error if the built graph is not (2d+2)-regular.
Reduction hardness_reduce(const Hypergraph& h, int d);

/// Throws input_error if colors is not a bicoloring of h.
Cut bicoloring_to_cut(const Hypergraph& h, const std::vector<int>& colors, const Reduction& reduction);

std::string reduction_map_to_json(const ReductionMap& map);

struct Chain {
    Graph graph;
    /// First id of each instance in the composed graph.
    std::vector<int> offsets;
    /// The chosen vertex v_i of each instance (composed ids).
    std::vector<int> chosen;
    /// bridges[i] is the K_{2d} joined to chosen[i] and chosen[i+1].
    std::vector<std::vector<int>> bridges;
};

Chain compose_chain(const std::vector<Graph>& instances, int d);
std::string chain_to_json(const Chain& chain);

/// All graphs on n vertices up to isomorphism (n <= 8), each in a canonical labelling.
std::vector<Graph> nonisomorphic_graphs(int n);
std::vector<Graph> connected_nonisomorphic_graphs(int n);

Graph random_gnm(int n, int m, std::uint64_t seed);

/// Connected when requested; edges = -1 picks a random count. Throws input_error when infeasible.
Graph random_bounded_degree(int n, int max_degree, std::uint64_t seed, bool connected = true, int edges = -1);

struct PlantedInstance {
    Graph graph;
    /// Sorted planted modulator; G - modulator is a cluster graph.
    std::vector<int> modulator;
};

/// Cluster graph on n - k vertices plus k vertices attached with probability p, labels shuffled.
PlantedInstance random_planted_modulator(int n, int k, double p, std::uint64_t seed);

Hypergraph random_hypergraph3(int n, int m, std::uint64_t seed);

}  // namespace dcut
