#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcut/branch_solver.hpp"
#include "dcut/graph.hpp"

namespace dcut {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes shared by all commands.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitUnknown = 2, kExitInternal = 3, kExitUsage = 64 };

/*
 * Tunables. Sources in increasing precedence: defaults, the config file
 * (key = value lines, '#' comments), DCUT_<KEY> environment variables, flags.
 */
struct Config {
    int tw_cap = 10;
    int dc_cap = 8;
    std::uint64_t node_budget = 0;
    int threads = 1;
    std::string records;
    std::map<std::string, std::string> source;  // key -> "default" | "file" | "env" | "flag"
};

/// Applies file text, then the environment, on top of the defaults. Throws input_error on bad keys or values.
Config resolve_config(const std::string& file_text, const std::function<const char*(const char*)>& getenv);
void set_config_value(Config& cfg, const std::string& key, const std::string& value, const std::string& source);
std::string print_config(const Config& cfg);

struct RunRecord {
    std::string instance;
    std::string hash;
    int d = 1;
    std::string algorithm;
    std::string answer;  // YES, NO or UNKNOWN
    std::optional<std::size_t> crossing_edges;
    std::optional<std::string> cut;
    double wall_ms = 0.0;
    std::map<std::string, double> stats;
    std::optional<std::uint64_t> seed;
    std::string version = kVersion;
};

std::string record_to_json(const RunRecord& r);
/// Throws input_error on malformed records.
RunRecord record_from_json(const std::string& line);
/// A YES record must carry a cut that is a valid d-cut of g; other answers must carry none.
bool record_verifies(const RunRecord& r, const Graph& g);

struct SolveRequest {
    std::string algo = "auto";
    int d = 1;
    std::optional<std::string> td_file;
    std::optional<std::vector<int>> modulator;
    std::uint64_t node_budget = 0;
    bool deterministic = false;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::No;
    std::optional<Cut> cut;
    /// The algorithm that actually ran (auto resolves to one of the others).
    std::string algorithm;
    std::map<std::string, double> stats;
};

/// Dispatches to one solver. Throws input_error for unknown algorithms or inapplicable inputs.
SolveOutcome run_solver(const Graph& g, const SolveRequest& req, const Config& cfg);

/// Reads "n"/"sides" cut JSON. Throws input_error when malformed.
Cut read_cut_json(const std::string& text);
std::string cut_to_json(const Cut& cut, int d);

/// Entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcut
