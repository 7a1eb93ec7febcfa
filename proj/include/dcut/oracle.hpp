#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "dcut/graph.hpp"

namespace dcut {

inline constexpr int kDefaultOracleLimit = 26;

struct OracleResult {
    bool has_cut = false;
    std::optional<Cut> witness;
    /// Proper bipartitions examined before the answer was known.
    std::uint64_t enumerated = 0;
};

/*
 * Exhaustive decision by enumerating every proper bipartition with vertex 0
 * pinned to side A. Bit i-1 of the running mask places vertex i on side B;
 * masks are visited in ascending order, so the witness is the first valid cut
 * in that order. Graphs with fewer than two vertices have no proper cut.
 */
OracleResult brute_force_d_cut(const Graph& g, int d, int size_limit = kDefaultOracleLimit);

/// Calls `visit` for every d-cut (vertex 0 on side A) in enumeration order until it returns false.
void enumerate_d_cuts(const Graph& g, int d, const std::function<bool(const Cut&)>& visit,
                      int size_limit = kDefaultOracleLimit);

/// Smallest d with a d-cut. Throws input_error for n < 2.
int min_cut_parameter(const Graph& g, int size_limit = kDefaultOracleLimit);

struct SeparatorCheckStats {
    int line_vertices = 0;
    std::uint64_t search_nodes = 0;
    /// Designated pair that admitted a separator, as original vertex ids.
    std::optional<std::pair<int, int>> pair;
};

/*
 * Attaches a private clique of size 2d to every vertex of g, takes the line
 * graph L, and asks whether for some pair of original vertices the designated
 * L-vertices of their cliques are separated by a set S with clique number of
 * L[S] at most d. The designated L-vertex of a private clique is the edge
 * between its two lowest-numbered clique vertices. Works on L alone; it never
 * looks at bipartitions of g. Throws input_error for disconnected g.
 */
bool separator_characterization_check(const Graph& g, int d, SeparatorCheckStats* stats = nullptr);

/// The augmented graph used by the check: g plus private cliques, and the designated edge per original vertex.
struct AugmentedGraph {
    Graph graph;
    std::vector<Edge> designated;
};
AugmentedGraph attach_private_cliques(const Graph& g, int d);

}  // namespace dcut
