#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

struct TreeDecomposition {
    /// Each bag is kept sorted ascending.
    std::vector<std::vector<int>> bags;
    /// Edges between bag indices.
    std::vector<Edge> tree_edges;

    int width() const;
};

/// Throws input_error naming the first violated property (tree shape, vertex coverage, edge coverage, connectivity).
void validate(const Graph& g, const TreeDecomposition& td);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    std::vector<int> bag;
    std::vector<int> children;
    /// Introduced or forgotten vertex; -1 for leaves and joins.
    int vertex = -1;
};

/// Nodes are stored children-first; the last node is the root and has an empty bag.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;

    int root() const { return static_cast<int>(nodes.size()) - 1; }
    int width() const;
};

/// Checks node-type constraints, the empty root, two-vertex leaves and the decomposition properties.
void validate(const Graph& g, const NiceTreeDecomposition& ntd);

/*
 * Converts td into a nice decomposition. Bags contained in a neighbouring bag
 * are contracted first; a remaining one-vertex leaf bag borrows the lowest
 * vertex of its neighbour so that every leaf can hold two vertices. Each leaf
 * starts from the two lowest vertices of its bag. Requires at least two
 * vertices.
 */
NiceTreeDecomposition niceify(const Graph& g, const TreeDecomposition& td);

/// Min-fill elimination (ties: fewer neighbours, then lower id).
TreeDecomposition heuristic_decomposition(const Graph& g);

/// PACE-style .td text: "s td <bags> <width+1> <n>", "b <id> <v...>", then "<i> <j>" tree edges; all 1-indexed.
TreeDecomposition read_td(std::istream& in, int* declared_vertices = nullptr);
TreeDecomposition read_td_file(const std::string& path, int* declared_vertices = nullptr);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);

}  // namespace dcut
