#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

struct DcStats {
    std::uint64_t seeds = 0;
    std::uint64_t states = 0;
    std::uint64_t candidates = 0;
};

/*
 * Budgeted extension DP over the clusters of G - U.
 *
 * Every bipartition of U with the lowest U vertex on side A is tried (or only
 * `fixed` if given; fixed[k] is the side of u_set[k]). Clusters are processed
 * by ascending smallest vertex. Throws input_error if G - U is not a cluster
 * graph.
 */
std::optional<Cut> solve_dc(const Graph& g, int d, const std::vector<int>& u_set,
                            const std::optional<std::vector<Side>>& fixed = std::nullopt, DcStats* stats = nullptr);

/*
 * Partitions of one cluster considered by the DP, as masks over `cluster`
 * (bit k set: cluster[k] goes to side B). side_of_u and budget are indexed
 * like u; a cluster of size >= 2d+1 only yields the two one-sided masks.
 */
std::vector<std::uint32_t> cluster_partitions(const Graph& g, int d, const std::vector<int>& cluster,
                                              const std::vector<int>& u, const std::vector<Side>& side_of_u,
                                              const std::vector<int>& budget);

/// Membership test for a single mask, recomputed from the definition.
bool in_partition_set(const Graph& g, int d, const std::vector<int>& cluster, const std::vector<int>& u,
                      const std::vector<Side>& side_of_u, const std::vector<int>& budget, std::uint32_t mask);

enum class DccCase { Monochromatic, Small, Bipartite, BoundedClasses, LargeClass };

struct DccStats {
    std::uint64_t seeds = 0;
    /// How often each case of the ladder was taken, indexed by DccCase.
    std::uint64_t cases[5] = {0, 0, 0, 0, 0};
    std::uint64_t delegated_seeds = 0;
};

/// Case ladder over the color classes of G - U. Throws input_error if G - U is not complete multipartite.
std::optional<Cut> solve_dcc(const Graph& g, int d, const std::vector<int>& u_set, DccStats* stats = nullptr);

/// Color classes of a complete multipartite graph (components of its complement), by smallest vertex.
std::vector<std::vector<int>> color_classes(const Graph& g);

/// Minimum U with G - U complete multipartite (cluster modulator of the complement).
std::vector<int> find_cocluster_modulator(const Graph& g, bool approx = false);

}  // namespace dcut
