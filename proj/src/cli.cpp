#include "dcut/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcut/bounded_degree.hpp"
#include "dcut/cluster_kernel.hpp"
#include "dcut/fpt_solvers.hpp"
#include "dcut/generators.hpp"
#include "dcut/oracle.hpp"
#include "dcut/tree_decomposition.hpp"
#include "dcut/treewidth_solver.hpp"

namespace dcut {

using nlohmann::json;

namespace {

constexpr std::uint64_t kNodesPerMs = 5000;
const char* const kConfigKeys[] = {"tw_cap", "dc_cap", "node_budget", "threads", "records"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw input_error("config: " + key + " expects a non-negative integer, got '" + value + "'");
    }
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << text;
}

}  // namespace

void set_config_value(Config& cfg, const std::string& key, const std::string& value, const std::string& source) {
    if (key == "tw_cap")
        cfg.tw_cap = static_cast<int>(parse_int(key, value));
    else if (key == "dc_cap")
        cfg.dc_cap = static_cast<int>(parse_int(key, value));
    else if (key == "node_budget")
        cfg.node_budget = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "threads")
        cfg.threads = std::max(1, static_cast<int>(parse_int(key, value)));
    else if (key == "records")
        cfg.records = value;
    else
        throw input_error("config: unknown key '" + key + "'");
    cfg.source[key] = source;
}

Config resolve_config(const std::string& file_text, const std::function<const char*(const char*)>& getenv) {
    Config cfg;
    for (const char* key : kConfigKeys) cfg.source[key] = "default";
    std::istringstream in(file_text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw input_error("config line " + std::to_string(lineno) + ": expected key = value");
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        set_config_value(cfg, trim(line.substr(0, eq)), value, "file");
    }
    for (const char* key : kConfigKeys) {
        std::string name = "DCUT_";
        for (const char* c = key; *c; ++c) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
        if (const char* v = getenv(name.c_str())) set_config_value(cfg, key, v, "env");
    }
    return cfg;
}

std::string print_config(const Config& cfg) {
    std::ostringstream out;
    auto src = [&](const char* key) { return cfg.source.count(key) ? cfg.source.at(key) : std::string("default"); };
    out << "tw_cap = " << cfg.tw_cap << "  # " << src("tw_cap") << '\n';
    out << "dc_cap = " << cfg.dc_cap << "  # " << src("dc_cap") << '\n';
    out << "node_budget = " << cfg.node_budget << "  # " << src("node_budget") << '\n';
    out << "threads = " << cfg.threads << "  # " << src("threads") << '\n';
    out << "records = \"" << cfg.records << "\"  # " << src("records") << '\n';
    return out.str();
}

std::string record_to_json(const RunRecord& r) {
    json j;
    j["instance"] = r.instance;
    j["hash"] = r.hash;
    j["d"] = r.d;
    j["algorithm"] = r.algorithm;
    j["answer"] = r.answer;
    j["k"] = r.crossing_edges ? json(*r.crossing_edges) : json(nullptr);
    j["cut"] = r.cut ? json(*r.cut) : json(nullptr);
    j["wall_ms"] = r.wall_ms;
    j["stats"] = r.stats;
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    j["version"] = r.version;
    return j.dump();
}

RunRecord record_from_json(const std::string& line) {
    try {
        json j = json::parse(line);
        RunRecord r;
        r.instance = j.at("instance").get<std::string>();
        r.hash = j.at("hash").get<std::string>();
        r.d = j.at("d").get<int>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.answer = j.at("answer").get<std::string>();
        if (r.answer != "YES" && r.answer != "NO" && r.answer != "UNKNOWN") throw input_error("record: bad answer");
        if (!j.at("k").is_null()) r.crossing_edges = j["k"].get<std::size_t>();
        if (!j.at("cut").is_null()) r.cut = j["cut"].get<std::string>();
        r.wall_ms = j.value("wall_ms", 0.0);
        r.stats = j.value("stats", std::map<std::string, double>{});
        if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
        r.version = j.value("version", std::string{});
        return r;
    } catch (const json::exception& e) {
        throw input_error(std::string("record: ") + e.what());
    }
}

bool record_verifies(const RunRecord& r, const Graph& g) {
    if (r.answer != "YES") return !r.cut.has_value();
    if (!r.cut || static_cast<int>(r.cut->size()) != g.num_vertices()) return false;
    try {
        DCutReport rep = verify_cut(g, Cut::from_string(*r.cut), r.d);
        return rep.valid && (!r.crossing_edges || *r.crossing_edges == rep.crossing_edges);
    } catch (const input_error&) {
        return false;
    }
}

Cut read_cut_json(const std::string& text) {
    try {
        json j = json::parse(text);
        Cut cut = Cut::from_string(j.at("sides").get<std::string>());
        if (j.contains("n") && j["n"].get<int>() != cut.size()) throw input_error("cut: 'n' does not match 'sides'");
        return cut;
    } catch (const json::exception& e) {
        throw input_error(std::string("cut: ") + e.what());
    }
}

std::string cut_to_json(const Cut& cut, int d) {
    json j;
    j["n"] = cut.size();
    j["d"] = d;
    j["sides"] = cut.to_string();
    return j.dump();
}

namespace {

std::vector<int> read_modulator_file(const std::string& path) {
    try {
        json j = json::parse(read_text(path));
        if (j.is_object()) j = j.at("modulator");
        return j.get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw input_error("modulator file: " + std::string(e.what()));
    }
}

SolveOutcome from_branch(const BranchResult& r) {
    SolveOutcome out;
    out.status = r.status;
    out.cut = r.cut;
    out.algorithm = "branch";
    out.stats["nodes"] = static_cast<double>(r.stats.nodes_expanded);
    out.stats["max_depth"] = r.stats.max_depth;
    out.stats["seeds"] = static_cast<double>(r.stats.seeds_tried);
    return out;
}

SolveOutcome from_treewidth(const TreewidthResult& r) {
    SolveOutcome out;
    out.status = r.status;
    out.cut = r.cut;
    out.algorithm = "treewidth";
    out.stats["width"] = r.stats.width;
    out.stats["entries"] = static_cast<double>(r.stats.total_entries);
    out.stats["max_fill_ratio"] = r.stats.max_fill_ratio;
    return out;
}

SolveOutcome from_optional(std::optional<Cut> cut, const std::string& algo) {
    SolveOutcome out;
    out.status = cut ? SolveStatus::Yes : SolveStatus::No;
    out.cut = std::move(cut);
    out.algorithm = algo;
    return out;
}

}  // namespace

SolveOutcome run_solver(const Graph& g, const SolveRequest& req, const Config& cfg) {
    const int d = req.d;
    if (d < 1) throw input_error("--d must be at least 1");
    const std::uint64_t budget = req.node_budget ? req.node_budget : cfg.node_budget;
    BranchOptions bopt;
    bopt.node_budget = budget;
    bopt.threads = cfg.threads;
    bopt.deterministic = req.deterministic || cfg.threads == 1;
    TreewidthOptions topt;
    topt.entry_budget = budget;

    const std::string& algo = req.algo;
    if (algo == "brute") {
        OracleResult r = brute_force_d_cut(g, d);
        SolveOutcome out = from_optional(r.has_cut ? std::optional<Cut>(r.witness) : std::nullopt, "brute");
        out.stats["enumerated"] = static_cast<double>(r.enumerated);
        return out;
    }
    if (algo == "branch") return from_branch(solve_branching(g, d, bopt));
    if (algo == "treewidth") {
        if (req.td_file) {
            TreeDecomposition td = read_td_file(*req.td_file);
            validate(g, td);
            if (g.num_vertices() < 2) return from_optional(std::nullopt, "treewidth");
            return from_treewidth(solve_treewidth(g, niceify(g, td), d, topt));
        }
        return from_treewidth(solve_treewidth(g, d, topt));
    }
    if (algo == "bounded-degree") {
        DegreeResult r = solve_bounded_degree(g, d);
        if (r.verdict == DegreeVerdict::NotApplicable)
            throw input_error("bounded-degree needs max degree <= d+2 (max degree is " + std::to_string(g.max_degree()) + ")");
        return from_optional(r.cut, "bounded-degree");
    }
    if (algo == "dc") {
        std::vector<int> u = req.modulator ? *req.modulator : find_cluster_modulator(g);
        DcStats stats;
        SolveOutcome out = from_optional(solve_dc(g, d, u, std::nullopt, &stats), "dc");
        out.stats["modulator"] = static_cast<double>(u.size());
        out.stats["seeds"] = static_cast<double>(stats.seeds);
        out.stats["states"] = static_cast<double>(stats.states);
        return out;
    }
    if (algo == "dcc") {
        std::vector<int> u = req.modulator ? *req.modulator : find_cocluster_modulator(g);
        DccStats stats;
        SolveOutcome out = from_optional(solve_dcc(g, d, u, &stats), "dcc");
        out.stats["modulator"] = static_cast<double>(u.size());
        out.stats["seeds"] = static_cast<double>(stats.seeds);
        out.stats["delegated"] = static_cast<double>(stats.delegated_seeds);
        return out;
    }
    if (algo == "auto") {
        SolveRequest sub = req;
        if (g.num_vertices() > 0 && g.max_degree() <= d + 2) {
            DegreeResult r = solve_bounded_degree(g, d);
            if (r.verdict != DegreeVerdict::NotApplicable) return from_optional(r.cut, "bounded-degree");
        }
        if (req.td_file) {
            sub.algo = "treewidth";
            return run_solver(g, sub, cfg);
        }
        TreeDecomposition td = heuristic_decomposition(g);
        if (g.num_vertices() < 2 || td.width() <= cfg.tw_cap) return from_treewidth(solve_treewidth(g, d, topt));
        if (req.modulator) {
            sub.algo = "dc";
            return run_solver(g, sub, cfg);
        }
        if (find_cluster_modulator(g, true).size() <= static_cast<std::size_t>(3 * cfg.dc_cap)) {
            std::vector<int> u = find_cluster_modulator(g);
            if (u.size() <= static_cast<std::size_t>(cfg.dc_cap)) {
                sub.algo = "dc";
                sub.modulator = u;
                return run_solver(g, sub, cfg);
            }
        }
        return from_branch(solve_branching(g, d, bopt));
    }
    throw input_error("unknown algorithm '" + algo + "'");
}

namespace {

RunRecord make_record(const std::string& instance, const Graph& g, int d, const SolveOutcome& o, double wall_ms) {
    RunRecord r;
    r.instance = instance;
    r.hash = instance_hash(g);
    r.d = d;
    r.algorithm = o.algorithm;
    r.answer = std::string(to_string(o.status));
    if (o.cut) {
        r.cut = o.cut->to_string();
        r.crossing_edges = verify_cut(g, *o.cut, d).crossing_edges;
    }
    r.wall_ms = wall_ms;
    r.stats = o.stats;
    return r;
}

void append_record(const Config& cfg, const RunRecord& r) {
    if (cfg.records.empty()) return;
    std::ofstream out(cfg.records, std::ios::app);
    if (!out) throw input_error("cannot append to " + cfg.records);
    out << record_to_json(r) << '\n';
}

int exit_for(SolveStatus s) {
    switch (s) {
        case SolveStatus::Yes: return kExitYes;
        case SolveStatus::No: return kExitNo;
        case SolveStatus::BudgetExceeded: return kExitUnknown;
    }
    return kExitInternal;
}

struct CrossTask {
    std::size_t instance;
    std::string algo;
    std::optional<SolveOutcome> outcome;
    std::string error;
};

int do_crosscheck(const std::string& corpus, int d, const std::vector<std::string>& algos, const Config& cfg,
                  const std::optional<std::string>& report_path, std::ostream& out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus)) throw input_error("corpus is not a directory: " + corpus);
    std::vector<fs::path> graphs, records;
    for (const auto& entry : fs::directory_iterator(corpus)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() == ".gr") graphs.push_back(entry.path());
        if (entry.path().extension() == ".jsonl") records.push_back(entry.path());
    }
    std::sort(graphs.begin(), graphs.end());
    std::sort(records.begin(), records.end());
    std::vector<Graph> loaded;
    std::vector<std::string> hashes;
    for (const auto& p : graphs) {
        loaded.push_back(read_dimacs_file(p.string()));
        hashes.push_back(instance_hash(loaded.back()));
    }

    std::vector<CrossTask> tasks;
    for (std::size_t i = 0; i < loaded.size(); ++i)
        for (const auto& a : algos) tasks.push_back({i, a, std::nullopt, {}});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            auto& task = tasks[t];
            SolveRequest req;
            req.algo = task.algo;
            req.d = d;
            req.deterministic = true;
            try {
                Config single = cfg;
                single.threads = 1;
                task.outcome = run_solver(loaded[task.instance], req, single);
            } catch (const std::exception& e) {
                task.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < cfg.threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<std::string> problems;
    std::vector<std::size_t> order(loaded.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(hashes[a], graphs[a]) < std::tie(hashes[b], graphs[b]);
    });
    for (std::size_t i : order) {
        std::optional<bool> answer;
        std::string first_algo;
        for (const auto& task : tasks) {
            if (task.instance != i) continue;
            const std::string where = hashes[i] + " (" + graphs[i].filename().string() + ") " + task.algo;
            if (!task.outcome) {
                problems.push_back(where + ": error: " + task.error);
                continue;
            }
            const auto& o = *task.outcome;
            append_record(cfg, make_record(graphs[i].filename().string(), loaded[i], d, o, 0.0));
            if (o.status == SolveStatus::BudgetExceeded) continue;
            const bool yes = o.status == SolveStatus::Yes;
            if (yes && (!o.cut || !is_d_cut(loaded[i], *o.cut, d))) problems.push_back(where + ": certificate fails verification");
            if (!answer) {
                answer = yes;
                first_algo = task.algo;
            } else if (*answer != yes) {
                problems.push_back(where + ": answer " + (yes ? "YES" : "NO") + " disagrees with " + first_algo);
            }
        }
    }
    for (const auto& p : records) {
        std::ifstream in(p);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (trim(line).empty()) continue;
            const std::string where = p.filename().string() + ":" + std::to_string(lineno);
            try {
                RunRecord r = record_from_json(line);
                auto it = std::find(hashes.begin(), hashes.end(), r.hash);
                if (it == hashes.end()) {
                    problems.push_back(where + ": record refers to unknown instance " + r.hash);
                } else if (!record_verifies(r, loaded[static_cast<std::size_t>(it - hashes.begin())])) {
                    problems.push_back(where + ": record " + r.hash + " fails verification");
                }
            } catch (const input_error& e) {
                problems.push_back(where + ": " + e.what());
            }
        }
    }

    std::ostringstream report;
    for (const auto& p : problems) report << p << '\n';
    if (report_path) write_text(*report_path, report.str());
    out << "crosscheck: " << loaded.size() << " instances, " << algos.size() << " algorithms, " << problems.size()
        << " problems\n"
        << report.str();
    return problems.empty() ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

void emit_graph(const Graph& g, const std::optional<std::string>& path, std::ostream& out) {
    if (path)
        write_dimacs_file(*path, g);
    else
        write_dimacs(out, g);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"d-cut toolkit: exact solvers, kernelization and instance generators", "dcut"};
    app.require_subcommand(0, 1);
    std::optional<std::string> config_file;
    bool print_cfg = false, version = false;
    std::map<std::string, std::string> flag_values;
    app.add_option("--config", config_file, "key = value config file (default: ./dcut.toml if present)");
    app.add_flag("--print-config", print_cfg, "print the resolved configuration and exit");
    app.add_flag("--version", version, "print version information and exit");
    for (const char* key : kConfigKeys) {
        std::string flag = std::string("--") + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        app.add_option_function<std::string>(flag, [&flag_values, key](const std::string& v) { flag_values[key] = v; },
                                             std::string("override config key ") + key);
    }

    // solve
    auto* solve = app.add_subcommand("solve", "decide whether the input has a d-cut");
    int d = 1;
    std::string input, algo = "auto";
    std::optional<std::string> td_file, modulator_file, cert_file;
    std::uint64_t timeout_ms = 0;
    bool deterministic = false;
    solve->add_option("--d", d, "maximum number of neighbours across the cut")->required();
    solve->add_option("--input", input, "graph in DIMACS format")->required();
    solve->add_option("--algo", algo, "auto|brute|branch|treewidth|bounded-degree|dc|dcc");
    solve->add_option("--td", td_file, "tree decomposition in PACE .td format");
    solve->add_option("--modulator", modulator_file, "JSON list of modulator vertex ids (0-indexed)");
    solve->add_option("--timeout-ms", timeout_ms, "search budget, converted to a node count");
    solve->add_flag("--deterministic", deterministic, "sequential search and no timing fields");
    solve->add_option("--cert", cert_file, "write the cut found to this JSON file");

    // verify
    auto* verify = app.add_subcommand("verify", "check a cut file against a graph");
    std::string cut_file;
    verify->add_option("--d", d)->required();
    verify->add_option("--input", input)->required();
    verify->add_option("--cut", cut_file, "cut JSON with 'sides' as an A/B string")->required();

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "run several algorithms on a corpus and compare");
    std::string corpus, algos = "brute,branch,treewidth";
    std::optional<std::string> report;
    cross->add_option("--d", d)->required();
    cross->add_option("--corpus", corpus, "directory of .gr instances and optional .jsonl records")->required();
    cross->add_option("--algos", algos, "comma-separated algorithm list");
    cross->add_option("--report", report, "write the disagreement report to this file");

    // kernelize
    auto* kern = app.add_subcommand("kernelize", "distance-to-cluster kernel");
    std::optional<std::string> output, trace_file, replay_file, mod_out, mod_in;
    bool approx = false;
    kern->add_option("--d", d)->required();
    kern->add_option("--input", input)->required();
    kern->add_option("--output", output, "reduced graph (DIMACS)");
    kern->add_option("--trace", trace_file, "reduction trace JSON");
    kern->add_option("--modulator", mod_out, "write the final modulator parts as JSON");
    kern->add_option("--use-modulator", mod_in, "start from this modulator (JSON list) instead of searching");
    kern->add_flag("--approx", approx, "3-approximate modulator search");
    kern->add_option("--replay", replay_file, "replay this trace on the input and compare with --output or a fresh kernel");

    // generate
    auto* gen = app.add_subcommand("generate", "instance constructions");
    gen->require_subcommand(1);
    int n = 0, m = 0, k = 0, max_degree = 4;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string kind = "gnm", inputs;
    std::optional<std::string> sidecar;
    auto* g_spool = gen->add_subcommand("spool", "(d, n)-spool");
    g_spool->add_option("--d", d)->required();
    g_spool->add_option("--n", n)->required();
    g_spool->add_option("--output", output);
    auto* g_red = gen->add_subcommand("reduction", "regular graph from a 3-uniform hypergraph");
    g_red->add_option("--d", d)->required();
    g_red->add_option("--input", input, "hypergraph file ('p hyp n m', 'h u v w')")->required();
    g_red->add_option("--output", output);
    g_red->add_option("--map", sidecar, "write the vertex registry as JSON");
    auto* g_chain = gen->add_subcommand("chain", "chain of instances bridged by K_{2d} cliques");
    g_chain->add_option("--d", d)->required();
    g_chain->add_option("--inputs", inputs, "comma-separated DIMACS files")->required();
    g_chain->add_option("--output", output);
    g_chain->add_option("--registry", sidecar, "write offsets, chosen vertices and bridges as JSON");
    auto* g_rand = gen->add_subcommand("random", "seeded random instances");
    g_rand->add_option("--kind", kind, "gnm|bounded-degree|planted|hypergraph3");
    g_rand->add_option("--n", n)->required();
    g_rand->add_option("--m", m, "edges (gnm, hypergraph3; -1 = random for bounded-degree)");
    g_rand->add_option("--max-degree", max_degree);
    g_rand->add_option("--k", k, "planted modulator size");
    g_rand->add_option("--p", p, "attachment probability of planted modulator vertices");
    g_rand->add_option("--seed", seed);
    g_rand->add_option("--output", output);
    g_rand->add_option("--modulator-out", sidecar, "planted: write the modulator as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (version) {
            out << "dcut " << kVersion << " (graph: DIMACS .gr; decomposition: PACE .td; trace: dcut-trace v1; record: v1)\n";
            return 0;
        }
        std::string text;
        if (config_file)
            text = read_text(*config_file);
        else if (std::filesystem::exists("dcut.toml"))
            text = read_text("dcut.toml");
        Config cfg = resolve_config(text, [](const char* name) { return std::getenv(name); });
        for (const auto& [key, value] : flag_values) set_config_value(cfg, key, value, "flag");
        if (print_cfg) {
            out << print_config(cfg);
            return 0;
        }

        if (solve->parsed()) {
            Graph g = read_dimacs_file(input);
            SolveRequest req;
            req.algo = algo;
            req.d = d;
            req.td_file = td_file;
            req.deterministic = deterministic;
            if (timeout_ms) req.node_budget = timeout_ms * kNodesPerMs;
            if (modulator_file) req.modulator = read_modulator_file(*modulator_file);
            const auto start = std::chrono::steady_clock::now();
            SolveOutcome o = run_solver(g, req, cfg);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (o.cut && !is_d_cut(g, *o.cut, d)) throw std::logic_error("solver returned an invalid certificate");
            RunRecord r = make_record(std::filesystem::path(input).filename().string(), g, d, o, deterministic ? 0.0 : ms);
            out << record_to_json(r) << '\n';
            append_record(cfg, r);
            if (cert_file && o.cut) write_text(*cert_file, cut_to_json(*o.cut, d) + "\n");
            return exit_for(o.status);
        }
        if (verify->parsed()) {
            Graph g = read_dimacs_file(input);
            Cut cut = read_cut_json(read_text(cut_file));
            DCutReport rep = verify_cut(g, cut, d);
            json j;
            j["valid"] = rep.valid;
            j["proper"] = rep.proper;
            j["max_cross_degree"] = rep.max_cross_degree;
            j["crossing_edges"] = rep.crossing_edges;
            j["violating_vertex"] = rep.violating_vertex ? json(*rep.violating_vertex) : json(nullptr);
            out << j.dump() << '\n';
            return rep.valid ? kExitYes : kExitNo;
        }
        if (cross->parsed()) return do_crosscheck(corpus, d, split_list(algos), cfg, report, out);
        if (kern->parsed()) {
            Graph g = read_dimacs_file(input);
            if (replay_file) {
                ReductionTrace t = trace_from_json(read_text(*replay_file));
                ReplayResult rr = replay_trace(g, t);
                Graph expected = output ? read_dimacs_file(*output) : kernelize(g, t.d, t.modulator).graph;
                const bool same = rr.output == expected;
                out << "replay: " << t.records.size() << " records, output " << (same ? "matches" : "differs") << '\n';
                return same ? 0 : 1;
            }
            std::optional<std::vector<int>> start;
            if (mod_in) start = read_modulator_file(*mod_in);
            KernelOptions kopt;
            kopt.approx_modulator = approx;
            KernelResult kr = kernelize(g, d, start, kopt);
            if (output) write_dimacs_file(*output, kr.graph);
            if (trace_file) write_text(*trace_file, trace_to_json(kr.trace) + "\n");
            if (mod_out) write_text(*mod_out, modulator_to_json(kr.modulator) + "\n");
            json j;
            j["status"] = std::string(to_string(kr.status));
            j["input_vertices"] = g.num_vertices();
            j["output_vertices"] = kr.graph.num_vertices();
            j["net_vertices"] = kr.net_vertices;
            j["modulator_size"] = kr.trace.modulator.size();
            j["rule_applications"] = kr.trace.records.size();
            j["flags"] = kr.trace.flags;
            out << j.dump() << '\n';
            if (!output) write_dimacs(out, kr.graph);
            return 0;
        }
        if (g_spool->parsed()) {
            emit_graph(spool(d, n), output, out);
            return 0;
        }
        if (g_red->parsed()) {
            Hypergraph h = read_hypergraph_file(input);
            Reduction red = hardness_reduce(h, d);
            emit_graph(red.graph, output, out);
            if (sidecar) write_text(*sidecar, reduction_map_to_json(red.map) + "\n");
            return 0;
        }
        if (g_chain->parsed()) {
            std::vector<Graph> parts;
            for (const auto& f : split_list(inputs)) parts.push_back(read_dimacs_file(f));
            Chain c = compose_chain(parts, d);
            emit_graph(c.graph, output, out);
            if (sidecar) write_text(*sidecar, chain_to_json(c) + "\n");
            return 0;
        }
        if (g_rand->parsed()) {
            if (kind == "gnm") {
                emit_graph(random_gnm(n, m, seed), output, out);
            } else if (kind == "bounded-degree") {
                emit_graph(random_bounded_degree(n, max_degree, seed, true, m > 0 ? m : -1), output, out);
            } else if (kind == "planted") {
                PlantedInstance pi = random_planted_modulator(n, k, p, seed);
                emit_graph(pi.graph, output, out);
                if (sidecar) write_text(*sidecar, json(pi.modulator).dump() + "\n");
            } else if (kind == "hypergraph3") {
                Hypergraph h = random_hypergraph3(n, m, seed);
                if (output) {
                    std::ofstream f(*output);
                    if (!f) throw input_error("cannot write " + *output);
                    write_hypergraph(f, h);
                } else {
                    write_hypergraph(out, h);
                }
            } else {
                throw input_error("unknown random kind '" + kind + "'");
            }
            return 0;
        }
        out << app.help();
        return kExitUsage;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace dcut
