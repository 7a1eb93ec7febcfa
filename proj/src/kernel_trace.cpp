#include <algorithm>
#include <set>

#include <json.hpp>

#include "dcut/cluster_kernel.hpp"

namespace dcut {

using nlohmann::json;

namespace {

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [a, b] : edges) out.push_back({a, b});
    return out;
}

std::vector<Edge> edges_from(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw input_error("trace: edge must be a pair");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

}  // namespace

std::string trace_to_json(const ReductionTrace& trace) {
    json j;
    j["format"] = "dcut-trace";
    j["version"] = 1;
    j["d"] = trace.d;
    j["input_vertices"] = trace.input_vertices;
    j["modulator"] = trace.modulator;
    j["records"] = json::array();
    for (const auto& r : trace.records) {
        json jr;
        jr["rule"] = r.rule;
        jr["parts"] = r.parts;
        jr["cluster"] = r.cluster;
        jr["removed_vertices"] = r.removed_vertices;
        jr["added_vertices"] = r.added_vertices;
        jr["added_edges"] = edges_json(r.added_edges);
        jr["removed_edges"] = edges_json(r.removed_edges);
        j["records"].push_back(std::move(jr));
    }
    j["status"] = std::string(to_string(trace.status));
    j["witness"] = {{"vertices", trace.witness_vertices}, {"sides", trace.witness_sides}};
    j["output_map"] = trace.output_map;
    j["flags"] = trace.flags;
    return j.dump(2);
}

ReductionTrace trace_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("trace: ") + e.what());
    }
    try {
        if (j.value("format", "") != "dcut-trace") throw input_error("trace: unknown format");
        if (j.value("version", 0) != 1) throw input_error("trace: unsupported version");
        ReductionTrace t;
        t.d = j.at("d").get<int>();
        t.input_vertices = j.at("input_vertices").get<int>();
        t.modulator = j.at("modulator").get<std::vector<int>>();
        for (const auto& jr : j.at("records")) {
            TraceRecord r;
            r.rule = jr.at("rule").get<int>();
            if (r.rule < 2 || r.rule > 8) throw input_error("trace: bad rule id");
            r.parts = jr.value("parts", std::vector<int>{});
            r.cluster = jr.value("cluster", std::vector<int>{});
            r.removed_vertices = jr.value("removed_vertices", std::vector<int>{});
            r.added_vertices = jr.value("added_vertices", std::vector<int>{});
            r.added_edges = edges_from(jr.value("added_edges", json::array()));
            r.removed_edges = edges_from(jr.value("removed_edges", json::array()));
            t.records.push_back(std::move(r));
        }
        const auto status = j.at("status").get<std::string>();
        if (status == "REDUCED")
            t.status = KernelStatus::Reduced;
        else if (status == "YES_BY_RULE_1")
            t.status = KernelStatus::YesByRule1;
        else
            throw input_error("trace: bad status");
        if (j.contains("witness")) {
            t.witness_vertices = j["witness"].value("vertices", std::vector<int>{});
            t.witness_sides = j["witness"].value("sides", std::string{});
        }
        t.output_map = j.value("output_map", std::vector<int>{});
        t.flags = j.value("flags", std::vector<std::string>{});
        return t;
    } catch (const json::exception& e) {
        throw input_error(std::string("trace: ") + e.what());
    }
}

std::string modulator_to_json(const Modulator& mod) {
    json j;
    j["parts"] = mod.parts;
    j["private_cliques"] = mod.private_cliques;
    j["size"] = mod.size();
    j["private_clique_vertices"] = mod.private_clique_vertices();
    return j.dump(2);
}

namespace {

class ReplayState {
public:
    ReplayState(const Graph& g, const std::vector<int>& u) {
        for (int v = 0; v < g.num_vertices(); ++v) alive_.insert(v);
        for (auto e : g.edges()) edges_.insert(e);
        next_ = g.num_vertices();
        for (int v : u) {
            if (!alive_.count(v)) throw input_error("replay: modulator vertex out of range");
            parts_.push_back({v});
            xs_.emplace_back();
        }
    }

    void apply(const TraceRecord& r, int d) {
        for (auto e : r.removed_edges)
            if (!edges_.erase(normal(e))) throw input_error("replay: removed edge is absent");
        for (int v : r.removed_vertices) {
            if (!alive_.erase(v)) throw input_error("replay: removed vertex is absent");
            for (auto it = edges_.begin(); it != edges_.end();)
                it = (it->first == v || it->second == v) ? edges_.erase(it) : std::next(it);
        }
        for (int v : r.added_vertices) {
            if (v != next_) throw input_error("replay: added vertex ids out of sequence");
            alive_.insert(next_++);
        }
        for (auto e : r.added_edges) {
            auto n = normal(e);
            if (n.first == n.second || !alive_.count(n.first) || !alive_.count(n.second))
                throw input_error("replay: added edge has a missing endpoint");
            if (!edges_.insert(n).second) throw input_error("replay: added edge already present");
        }
        if (r.rule == 2 || r.rule == 3) {
            if (r.parts.size() != 2 || r.parts[0] >= r.parts[1] || r.parts[0] < 0 ||
                static_cast<std::size_t>(r.parts[1]) >= parts_.size())
                throw input_error("replay: bad merge parts");
            if (static_cast<int>(r.added_vertices.size()) != 2 * d) throw input_error("replay: merge must add 2d vertices");
            auto& pi = parts_[static_cast<std::size_t>(r.parts[0])];
            auto& pj = parts_[static_cast<std::size_t>(r.parts[1])];
            pi.insert(pi.end(), pj.begin(), pj.end());
            std::sort(pi.begin(), pi.end());
            pj.clear();
            xs_[static_cast<std::size_t>(r.parts[1])].clear();
            xs_[static_cast<std::size_t>(r.parts[0])] = r.added_vertices;
        } else if (!r.added_vertices.empty()) {
            throw input_error("replay: only merges add vertices");
        }
    }

    Checkpoint checkpoint(int rule) const {
        Checkpoint c;
        c.rule = rule;
        c.working_ids.assign(alive_.begin(), alive_.end());
        auto compact = [&](int v) {
            return static_cast<int>(std::lower_bound(c.working_ids.begin(), c.working_ids.end(), v) - c.working_ids.begin());
        };
        std::vector<Edge> edges;
        for (auto [a, b] : edges_) edges.emplace_back(compact(a), compact(b));
        c.graph = Graph(static_cast<int>(c.working_ids.size()), edges);
        auto map_all = [&](const std::vector<int>& vs) {
            std::vector<int> out;
            for (int v : vs) out.push_back(compact(v));
            return out;
        };
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            c.parts.push_back(map_all(parts_[i]));
            c.private_cliques.push_back(map_all(xs_[i]));
        }
        return c;
    }

private:
    static Edge normal(Edge e) { return {std::min(e.first, e.second), std::max(e.first, e.second)}; }

    std::set<int> alive_;
    std::set<Edge> edges_;
    int next_ = 0;
    std::vector<std::vector<int>> parts_;
    std::vector<std::vector<int>> xs_;
};

}  // namespace

ReplayResult replay_trace(const Graph& g, const ReductionTrace& trace) {
    if (g.num_vertices() != trace.input_vertices) throw input_error("replay: input vertex count does not match the trace");
    ReplayState state(g, trace.modulator);
    ReplayResult out;
    out.checkpoints.push_back(state.checkpoint(0));
    for (const auto& r : trace.records) {
        state.apply(r, trace.d);
        out.checkpoints.push_back(state.checkpoint(r.rule));
    }
    const Checkpoint& last = out.checkpoints.back();
    if (trace.status == KernelStatus::YesByRule1) {
        if (trace.witness_vertices != last.working_ids) throw input_error("replay: witness does not cover the final graph");
        Cut cut = Cut::from_string(trace.witness_sides);
        if (cut.size() != last.graph.num_vertices() || !is_d_cut(last.graph, cut, trace.d))
            throw input_error("replay: Rule 1 witness is not a d-cut");
        out.output = Graph(2);
    } else {
        if (!trace.output_map.empty() && trace.output_map != last.working_ids)
            throw input_error("replay: output map differs from the replayed vertex set");
        out.output = last.graph;
    }
    return out;
}

}  // namespace dcut
