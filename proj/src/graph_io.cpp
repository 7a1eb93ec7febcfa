#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dcut/graph.hpp"

namespace dcut {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long declared_m = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag) || tag == "c") continue;
        auto fail = [&](const std::string& what) {
            throw input_error("dimacs line " + std::to_string(line_no) + ": " + what);
        };
        if (tag == "p") {
            std::string kind;
            if (n != -1) fail("duplicate problem line");
            if (!(tokens >> kind >> n >> declared_m) || kind != "edge" || n < 0 || declared_m < 0)
                fail("expected 'p edge <n> <m>'");
        } else if (tag == "e") {
            if (n == -1) fail("edge before problem line");
            long long u = 0, v = 0;
            if (!(tokens >> u >> v)) fail("expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n) fail("endpoint out of range");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            fail("unknown line tag '" + tag + "'");
        }
        std::string extra;
        if (tokens >> extra) fail("trailing tokens");
    }
    if (n == -1) throw input_error("dimacs: missing problem line");
    if (static_cast<long long>(edges.size()) != declared_m)
        throw input_error("dimacs: declared " + std::to_string(declared_m) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write graph file: " + path);
    write_dimacs(out, g);
}

std::string to_dimacs_string(const Graph& g) {
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

std::string instance_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_dimacs_string(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace dcut
