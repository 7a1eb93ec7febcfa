#include "dcut/tree_decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace dcut {

int TreeDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return static_cast<int>(largest) - 1;
}

int NiceTreeDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
    return static_cast<int>(largest) - 1;
}

namespace {

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

void validate(const Graph& g, const TreeDecomposition& td) {
    const int n = g.num_vertices();
    const int k = static_cast<int>(td.bags.size());
    auto fail = [](const std::string& what) { throw input_error("tree decomposition: " + what); };
    if (k == 0) {
        if (n > 0) fail("vertex coverage: no bags");
        return;
    }
    for (int i = 0; i < k; ++i) {
        const auto& bag = td.bags[static_cast<std::size_t>(i)];
        if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            fail("bag " + std::to_string(i) + " is not a sorted set");
        for (int v : bag)
            if (v < 0 || v >= n) fail("bag " + std::to_string(i) + " names vertex " + std::to_string(v) + " outside the graph");
    }
    if (static_cast<int>(td.tree_edges.size()) != k - 1) fail("tree shape: expected " + std::to_string(k - 1) + " tree edges");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) fail("tree shape: bad tree edge");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != k) fail("tree shape: bag tree is not connected");

    std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i)
        for (int v : td.bags[static_cast<std::size_t>(i)]) holders[static_cast<std::size_t>(v)].push_back(i);
    for (int v = 0; v < n; ++v)
        if (holders[static_cast<std::size_t>(v)].empty()) fail("vertex coverage: vertex " + std::to_string(v) + " is in no bag");
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : holders[static_cast<std::size_t>(u)])
            if (contains(td.bags[static_cast<std::size_t>(i)], v)) {
                covered = true;
                break;
            }
        if (!covered) fail("edge coverage: edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
    for (int v = 0; v < n; ++v) {
        const auto& h = holders[static_cast<std::size_t>(v)];
        std::size_t inside = 0;
        for (auto [a, b] : td.tree_edges)
            if (contains(td.bags[static_cast<std::size_t>(a)], v) && contains(td.bags[static_cast<std::size_t>(b)], v)) ++inside;
        if (inside + 1 != h.size()) fail("connectivity: bags holding vertex " + std::to_string(v) + " are not connected");
    }
}

void validate(const Graph& g, const NiceTreeDecomposition& ntd) {
    auto fail = [](const std::string& what) { throw input_error("nice tree decomposition: " + what); };
    const int k = static_cast<int>(ntd.nodes.size());
    if (k == 0) fail("no nodes");
    if (!ntd.nodes.back().bag.empty()) fail("root bag is not empty");
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    TreeDecomposition plain;
    for (int x = 0; x < k; ++x) {
        const NiceNode& node = ntd.nodes[static_cast<std::size_t>(x)];
        const std::string where = "node " + std::to_string(x) + ": ";
        if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
            std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end())
            fail(where + "bag is not a sorted set");
        for (int c : node.children) {
            if (c < 0 || c >= x) fail(where + "child index must precede its parent");
            if (parent[static_cast<std::size_t>(c)] != -1) fail(where + "child has two parents");
            parent[static_cast<std::size_t>(c)] = x;
            plain.tree_edges.emplace_back(c, x);
        }
        plain.bags.push_back(node.bag);
        auto child_bag = [&](std::size_t i) -> const std::vector<int>& {
            return ntd.nodes[static_cast<std::size_t>(node.children[i])].bag;
        };
        switch (node.kind) {
            case NiceKind::Leaf:
                if (!node.children.empty()) fail(where + "leaf with children");
                if (node.bag.size() != 2) fail(where + "leaf bag must hold exactly two vertices");
                break;
            case NiceKind::Introduce: {
                if (node.children.size() != 1) fail(where + "introduce needs one child");
                std::vector<int> expect = child_bag(0);
                if (contains(expect, node.vertex)) fail(where + "introduced vertex already in child bag");
                expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
                if (expect != node.bag) fail(where + "introduce must add exactly its vertex");
                break;
            }
            case NiceKind::Forget: {
                if (node.children.size() != 1) fail(where + "forget needs one child");
                std::vector<int> expect = child_bag(0);
                auto it = std::lower_bound(expect.begin(), expect.end(), node.vertex);
                if (it == expect.end() || *it != node.vertex) fail(where + "forgotten vertex not in child bag");
                expect.erase(it);
                if (expect != node.bag) fail(where + "forget must remove exactly its vertex");
                break;
            }
            case NiceKind::Join:
                if (node.children.size() != 2) fail(where + "join needs two children");
                if (child_bag(0) != node.bag || child_bag(1) != node.bag) fail(where + "join bags differ");
                break;
        }
    }
    for (int x = 0; x + 1 < k; ++x)
        if (parent[static_cast<std::size_t>(x)] == -1) fail("node " + std::to_string(x) + " is detached from the root");
    validate(g, plain);
}

namespace {

class NiceBuilder {
public:
    explicit NiceBuilder(NiceTreeDecomposition& out) : out_(out) {}

    int add(NiceKind kind, std::vector<int> bag, std::vector<int> children, int vertex) {
        out_.nodes.push_back({kind, std::move(bag), std::move(children), vertex});
        return static_cast<int>(out_.nodes.size()) - 1;
    }

    // Forgets from\to, then introduces to\from, both in ascending order.
    int morph(int node, const std::vector<int>& to) {
        std::vector<int> bag = out_.nodes[static_cast<std::size_t>(node)].bag;
        const std::vector<int> from = bag;
        for (int v : from)
            if (!contains(to, v)) {
                bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
                node = add(NiceKind::Forget, bag, {node}, v);
            }
        for (int v : to)
            if (!contains(from, v)) {
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                node = add(NiceKind::Introduce, bag, {node}, v);
            }
        return node;
    }

    int leaf_chain(const std::vector<int>& bag) {
        std::vector<int> start{bag[0], bag[1]};
        return morph(add(NiceKind::Leaf, start, {}, -1), bag);
    }

private:
    NiceTreeDecomposition& out_;
};

}  // namespace

NiceTreeDecomposition niceify(const Graph& g, const TreeDecomposition& td) {
    validate(g, td);
    if (g.num_vertices() < 2) throw input_error("niceify: needs at least two vertices");
    const std::size_t k = td.bags.size();
    std::vector<std::vector<int>> bags = td.bags;
    std::vector<std::set<int>> adj(k);
    for (auto [a, b] : td.tree_edges) {
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    std::vector<char> alive(k, 1);
    std::size_t alive_count = k;

    for (bool changed = true; changed && alive_count > 1;) {
        changed = false;
        for (std::size_t x = 0; x < k && !changed; ++x) {
            if (!alive[x]) continue;
            for (int y : adj[x]) {
                if (!is_subset(bags[x], bags[static_cast<std::size_t>(y)])) continue;
                for (int z : adj[x])
                    if (z != y) {
                        adj[static_cast<std::size_t>(z)].erase(static_cast<int>(x));
                        adj[static_cast<std::size_t>(z)].insert(y);
                        adj[static_cast<std::size_t>(y)].insert(z);
                    }
                adj[static_cast<std::size_t>(y)].erase(static_cast<int>(x));
                adj[x].clear();
                alive[x] = 0;
                --alive_count;
                changed = true;
                break;
            }
        }
    }
    for (std::size_t x = 0; x < k; ++x) {
        if (!alive[x] || adj[x].size() != 1 || bags[x].size() != 1) continue;
        const auto& neighbour = bags[static_cast<std::size_t>(*adj[x].begin())];
        bags[x].push_back(neighbour.front());
        std::sort(bags[x].begin(), bags[x].end());
    }

    std::size_t root = 0;
    while (!alive[root]) ++root;
    if (bags[root].size() < 2 && alive_count == 1) throw input_error("niceify: single bag with fewer than two vertices");

    NiceTreeDecomposition out;
    NiceBuilder builder(out);
    // Iterative post-order over the contracted bag tree.
    struct Frame {
        std::size_t bag;
        int parent;
        std::vector<int> done;
        std::vector<int> pending;
    };
    std::vector<Frame> stack;
    auto push = [&](std::size_t x, int parent) {
        Frame f{x, parent, {}, {}};
        for (int y : adj[x])
            if (y != parent) f.pending.push_back(y);
        std::reverse(f.pending.begin(), f.pending.end());
        stack.push_back(std::move(f));
    };
    push(root, -1);
    int top_node = -1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (!f.pending.empty()) {
            int y = f.pending.back();
            f.pending.pop_back();
            push(static_cast<std::size_t>(y), static_cast<int>(f.bag));
            continue;
        }
        const auto& bag = bags[f.bag];
        int node;
        if (f.done.empty()) {
            node = builder.leaf_chain(bag);
        } else {
            node = builder.morph(f.done[0], bag);
            for (std::size_t i = 1; i < f.done.size(); ++i) {
                int other = builder.morph(f.done[i], bag);
                node = builder.add(NiceKind::Join, bag, {node, other}, -1);
            }
        }
        stack.pop_back();
        if (stack.empty())
            top_node = node;
        else
            stack.back().done.push_back(node);
    }
    builder.morph(top_node, {});
    if (!out.nodes.back().bag.empty()) throw std::logic_error("niceify: root bag not empty");
    return out;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
    const int n = g.num_vertices();
    TreeDecomposition td;
    if (n == 0) return td;
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<char> eliminated(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    auto fill_in = [&](int v) {
        const auto& nb = adj[static_cast<std::size_t>(v)];
        long missing = 0;
        for (auto a = nb.begin(); a != nb.end(); ++a)
            for (auto b = std::next(a); b != nb.end(); ++b)
                if (!adj[static_cast<std::size_t>(*a)].count(*b)) ++missing;
        return missing;
    };
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[static_cast<std::size_t>(v)]) continue;
            long f = fill_in(v);
            if (best == -1 || f < best_fill ||
                (f == best_fill && adj[static_cast<std::size_t>(v)].size() < adj[static_cast<std::size_t>(best)].size())) {
                best = v;
                best_fill = f;
            }
        }
        const auto nb = adj[static_cast<std::size_t>(best)];
        std::vector<int> bag(nb.begin(), nb.end());
        bag.insert(std::upper_bound(bag.begin(), bag.end(), best), best);
        td.bags.push_back(std::move(bag));
        for (auto a = nb.begin(); a != nb.end(); ++a) {
            adj[static_cast<std::size_t>(*a)].erase(best);
            for (auto b = std::next(a); b != nb.end(); ++b) {
                adj[static_cast<std::size_t>(*a)].insert(*b);
                adj[static_cast<std::size_t>(*b)].insert(*a);
            }
        }
        adj[static_cast<std::size_t>(best)].clear();
        eliminated[static_cast<std::size_t>(best)] = 1;
        position[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
    }
    // Bag i links to the bag of its earliest-eliminated later neighbour; pieces without one are chained.
    int previous_root = -1;
    for (int i = 0; i < n; ++i) {
        int link = -1;
        for (int w : td.bags[static_cast<std::size_t>(i)]) {
            if (w == order[static_cast<std::size_t>(i)]) continue;
            int p = position[static_cast<std::size_t>(w)];
            if (link == -1 || p < link) link = p;
        }
        if (link != -1) {
            td.tree_edges.emplace_back(i, link);
        } else {
            if (previous_root != -1) td.tree_edges.emplace_back(previous_root, i);
            previous_root = i;
        }
    }
    return td;
}

TreeDecomposition read_td(std::istream& in, int* declared_vertices) {
    TreeDecomposition td;
    std::string line;
    int bags = -1, n = -1, line_no = 0;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag) || tag == "c") continue;
        auto fail = [&](const std::string& what) {
            throw input_error("td line " + std::to_string(line_no) + ": " + what);
        };
        if (tag == "s") {
            std::string kind;
            int width_plus_one = 0;
            if (bags != -1) fail("duplicate solution line");
            if (!(tokens >> kind >> bags >> width_plus_one >> n) || kind != "td" || bags < 0 || n < 0)
                fail("expected 's td <bags> <width+1> <n>'");
            td.bags.assign(static_cast<std::size_t>(bags), {});
            seen.assign(static_cast<std::size_t>(bags), 0);
        } else if (tag == "b") {
            if (bags == -1) fail("bag before solution line");
            int id = 0;
            if (!(tokens >> id) || id < 1 || id > bags) fail("bad bag id");
            if (seen[static_cast<std::size_t>(id - 1)]) fail("bag listed twice");
            seen[static_cast<std::size_t>(id - 1)] = 1;
            auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
            int v = 0;
            while (tokens >> v) {
                if (v < 1 || v > n) fail("bag vertex out of range");
                bag.push_back(v - 1);
            }
            if (!tokens.eof()) fail("malformed bag");
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) fail("repeated vertex in bag");
        } else {
            if (bags == -1) fail("tree edge before solution line");
            int a = 0, b = 0;
            std::istringstream edge(line);
            if (!(edge >> a >> b) || a < 1 || b < 1 || a > bags || b > bags) fail("bad tree edge");
            std::string extra;
            if (edge >> extra) fail("trailing tokens");
            td.tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    if (bags == -1) throw input_error("td: missing solution line");
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw input_error("td: some bag is never listed");
    if (declared_vertices) *declared_vertices = n;
    return td;
}

TreeDecomposition read_td_file(const std::string& path, int* declared_vertices) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open decomposition file: " + path);
    return read_td(in, declared_vertices);
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace dcut
