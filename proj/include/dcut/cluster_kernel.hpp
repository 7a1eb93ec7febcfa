#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

/// Minimum U with G - U a cluster graph (3-way branching on induced P3s). With approx, all three P3 vertices go.
std::vector<int> find_cluster_modulator(const Graph& g, bool approx = false);

/// Lowest induced path a-b-c (b the middle vertex, a < c), scanning middle vertices in ascending order.
std::optional<std::array<int, 3>> find_induced_p3(const Graph& g);

/*
 * Modulator split into monochromatic parts. private_cliques[i] is the clique
 * X_i attached to parts[i]; it is empty unless parts[i] has two or more
 * vertices. Emptied parts (after a merge) stay in place so indices are stable.
 */
struct Modulator {
    std::vector<std::vector<int>> parts;
    std::vector<std::vector<int>> private_cliques;

    static Modulator singletons(const std::vector<int>& u);
    /// All vertices of all parts, sorted.
    std::vector<int> vertices() const;
    std::size_t size() const;
    std::size_t private_clique_vertices() const;
};

struct ClusterInfo {
    std::vector<int> vertices;
    bool small = false;
    bool big = false;
    bool simple = false;
    bool ambiguous = false;
    bool fixed = false;
    /// For each vertex of the cluster, the only part it sees, -1 if it sees none, -2 if it sees several.
    std::vector<int> part_of_vertex;
};

struct ClusterView {
    /// Components of G - U - X, ordered by smallest vertex.
    std::vector<ClusterInfo> clusters;
};

ClusterView analyze_clusters(const Graph& g, const Modulator& mod, int d);

/// Vertices of G - U - X forced to the side of parts[i] by the four membership cases. Sorted.
std::vector<int> compute_n2d(const Graph& g, const Modulator& mod, int i, int d);

enum class KernelStatus { Reduced, YesByRule1 };

std::string_view to_string(KernelStatus s);

/// One rule application, with the graph edits it made. Vertex ids refer to the working graph.
struct TraceRecord {
    int rule = 0;
    /// Merge rules: the two parts merged (the survivor first). Rule 6: the part. Otherwise empty.
    std::vector<int> parts;
    /// The cluster the rule looked at (Rules 1, 4, 5, 6, 7, 8), if any.
    std::vector<int> cluster;
    std::vector<int> removed_vertices;
    std::vector<int> added_vertices;
    std::vector<Edge> added_edges;
    std::vector<Edge> removed_edges;
};

/*
 * Working ids: input vertices keep their ids; vertices of fresh private
 * cliques get ids n, n+1, ... in creation order. The output graph lists the
 * surviving working ids in ascending order (output_map).
 */
struct ReductionTrace {
    int d = 1;
    int input_vertices = 0;
    std::vector<int> modulator;
    std::vector<TraceRecord> records;
    KernelStatus status = KernelStatus::Reduced;
    /// Rule 1 witness: working ids and their sides in the graph current when Rule 1 fired.
    std::vector<int> witness_vertices;
    std::string witness_sides;
    std::vector<int> output_map;
    std::vector<std::string> flags;
};

struct KernelOptions {
    bool approx_modulator = false;
};

struct KernelResult {
    KernelStatus status = KernelStatus::Reduced;
    /// The reduced instance. For YesByRule1 this is the fixed yes-instance on two isolated vertices.
    Graph graph;
    /// Parts and private cliques in output ids.
    Modulator modulator;
    ReductionTrace trace;
    /// For YesByRule1: the graph Rule 1 was applied to (compacted) and a d-cut of it.
    std::optional<Graph> rule1_graph;
    std::optional<Cut> rule1_witness;
    /// Output vertex count without private clique vertices.
    int net_vertices = 0;
};

/// Rules 1 to 8 applied exhaustively, restarting from Rule 1 after every application.
KernelResult kernelize(const Graph& g, int d, const std::optional<std::vector<int>>& modulator = std::nullopt,
                       const KernelOptions& options = {});

/// State after a prefix of the trace, in compacted ids (ascending working id).
struct Checkpoint {
    int rule = 0;
    Graph graph;
    std::vector<int> working_ids;
    std::vector<std::vector<int>> parts;
    std::vector<std::vector<int>> private_cliques;
};

struct ReplayResult {
    /// checkpoints[0] is the input; checkpoints[k] follows records[k-1].
    std::vector<Checkpoint> checkpoints;
    Graph output;
};

/// Re-applies the recorded edits to g. Throws input_error when a record does not fit the graph.
ReplayResult replay_trace(const Graph& g, const ReductionTrace& trace);

std::string trace_to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const std::string& text);
std::string modulator_to_json(const Modulator& mod);

/// Explicit vertex bound for a reduced instance with modulator size u.
double kernel_size_bound(int d, int u);

}  // namespace dcut
