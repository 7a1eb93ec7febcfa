#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcut {

/// Raised for malformed input: bad files, out-of-range ids, violated preconditions.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive routine is asked to run above its configured size limit.
class size_limit_error : public input_error {
public:
    using input_error::input_error;
};

using Edge = std::pair<int, int>;

/*
 * Simple undirected graph on vertices 0..n-1.
 *
 * Neighbor lists are kept sorted, so two graphs compare equal iff they have
 * the same labeled edge set. For n <= 64 a bitmask mirror of the adjacency is
 * kept as well; hot loops in the exhaustive solvers use it directly.
 */
class Graph {
public:
    static constexpr int kDenseLimit = 64;

    Graph() = default;
    explicit Graph(int n);
    /// Throws input_error on self-loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;
    int min_degree() const;
    bool has_edge(int u, int v) const;

    bool dense() const { return !mask_.empty() || n_ == 0; }
    /// Only valid when dense().
    std::uint64_t neighbor_mask(int v) const { return mask_[static_cast<std::size_t>(v)]; }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced_subgraph(std::span<const int> vertices) const;
    Graph complement() const;
    /// Relabels vertex v as perm[v].
    Graph relabeled(std::span<const int> perm) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;
};

/// Incremental construction helper used by the generators.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}

    int num_vertices() const { return n_; }
    int add_vertex() { return n_++; }
    /// Returns the id of the first of `count` new vertices.
    int add_vertices(int count);
    /// Throws std::logic_error on a duplicate or a self-loop.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    void add_clique(std::span<const int> vertices);
    void add_complete_bipartite(std::span<const int> left, std::span<const int> right);
    /// Pairs left[i] with right[i]; both spans must have equal size.
    void add_matching(std::span<const int> left, std::span<const int> right);
    Graph build() const;

private:
    int n_ = 0;
    std::set<Edge> edges_;
};

enum class Side : std::uint8_t { A = 0, B = 1 };

constexpr Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

/// Two-sided vertex assignment. Properness (both sides non-empty) is checked by verify_cut.
class Cut {
public:
    Cut() = default;
    explicit Cut(int n, Side fill = Side::A) : sides_(static_cast<std::size_t>(n), fill) {}
    explicit Cut(std::vector<Side> sides) : sides_(std::move(sides)) {}

    /// Cut of n vertices with exactly `a_side` on side A.
    static Cut from_side_a(int n, std::span<const int> a_side);
    /// Parses a string of 'A'/'B' characters.
    static Cut from_string(std::string_view text);

    int size() const { return static_cast<int>(sides_.size()); }
    Side side(int v) const { return sides_[static_cast<std::size_t>(v)]; }
    void set(int v, Side s) { sides_[static_cast<std::size_t>(v)] = s; }
    int count(Side s) const;
    std::vector<int> vertices_on(Side s) const;
    Cut swapped() const;
    std::string to_string() const;

    const std::vector<Side>& sides() const { return sides_; }
    bool operator==(const Cut&) const = default;

private:
    std::vector<Side> sides_;
};

struct DCutReport {
    bool valid = false;
    /// Both sides non-empty.
    bool proper = false;
    int max_cross_degree = 0;
    /// Lowest vertex whose cross degree exceeds d.
    std::optional<int> violating_vertex;
    std::size_t crossing_edges = 0;
};

/// O(n + m). Throws input_error when the cut does not cover exactly the vertices of g, or d < 1.
DCutReport verify_cut(const Graph& g, const Cut& cut, int d);
inline bool is_d_cut(const Graph& g, const Cut& cut, int d) { return verify_cut(g, cut, d).valid; }

/// A shortest cycle as an ordered vertex sequence, or nullopt for forests.
std::optional<std::vector<int>> girth_cycle(const Graph& g);

struct LineGraph {
    Graph graph;
    /// edge_of[i] is the edge of the source graph represented by vertex i.
    std::vector<Edge> edge_of;
};

/// Vertex i corresponds to the i-th edge of g.edges(). Throws input_error on edgeless graphs.
LineGraph line_graph(const Graph& g);

/// True iff the clique number of g is at most d. Exhaustive; meant for small graphs.
bool max_clique_at_most(const Graph& g, int d);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Every connected component is a clique.
bool is_cluster_graph(const Graph& g);

// DIMACS-like text format: "p edge <n> <m>", then "e <u> <v>" with 1-indexed endpoints.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::string& path, const Graph& g);
std::string to_dimacs_string(const Graph& g);

/// FNV-1a hash of the canonical DIMACS text, as 16 hex digits.
std::string instance_hash(const Graph& g);

}  // namespace dcut
