#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dcut/branch_solver.hpp"
#include "dcut/tree_decomposition.hpp"

namespace dcut {

struct TreewidthOptions {
    /// Abort once this many table entries have been created; 0 means unlimited.
    std::uint64_t entry_budget = 0;
    /*
     * Debug mode. Every stored entry is re-derived from its reconstructed
     * partial bipartition and compared; each join table is recomputed by
     * enumerating splittings over the whole key space.
     */
    bool check_entries = false;
};

struct TreewidthStats {
    int width = -1;
    /// Entries per nice node, indexed like NiceTreeDecomposition::nodes.
    std::vector<std::size_t> table_sizes;
    std::uint64_t total_entries = 0;
    /// Largest ratio table_size / (2^|B| (d+1)^|B| 2) seen over all nodes.
    double max_fill_ratio = 0.0;
};

struct TreewidthResult {
    SolveStatus status = SolveStatus::No;
    std::optional<Cut> cut;
    TreewidthStats stats;
};

/*
 * Dynamic programming over a nice tree decomposition. A table entry is
 * (A, alpha, t): A is the part of the bag on the first side, alpha[i] counts
 * neighbours of the i-th bag vertex (bag order = id order) that were already
 * forgotten and lie on the other side, and t records whether both sides are
 * non-empty in the processed subgraph. An entry with vertices of the bag on
 * both sides must have t = 1. Throws input_error if ntd is not a nice
 * decomposition of g.
 */
TreewidthResult solve_treewidth(const Graph& g, const NiceTreeDecomposition& ntd, int d,
                                const TreewidthOptions& options = {});

/// Heuristic decomposition, niceified, then solved. Graphs with n < 2 answer No directly.
TreewidthResult solve_treewidth(const Graph& g, int d, const TreewidthOptions& options = {});

/// All pairs (x, y) with x + y = alpha coordinate-wise; there are prod(alpha_j + 1) of them.
std::vector<std::pair<std::vector<int>, std::vector<int>>> splittings(const std::vector<int>& alpha);

/// 2^b (d+1)^b 2, the number of distinct keys for a bag of b vertices.
double table_key_space(int bag_size, int d);

}  // namespace dcut
