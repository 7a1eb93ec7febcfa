#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dcut/graph.hpp"

namespace dcut {

enum class SolveStatus { Yes, No, BudgetExceeded };

std::string_view to_string(SolveStatus s);

enum class Rule : std::uint8_t { R1, R2, R3, R4, B1, B2 };
inline constexpr std::size_t kRuleCount = 6;

struct BranchStats {
    std::uint64_t nodes_expanded = 0;
    int max_depth = 0;
    /// Indexed by Rule. R4 counts single forced assignments.
    std::array<std::uint64_t, kRuleCount> rule_counts{};
    std::uint64_t seeds_tried = 0;
};

struct BranchOptions {
    /// Total search nodes across all seeds; 0 means unlimited.
    std::uint64_t node_budget = 0;
    int threads = 1;
    /// Forces sequential seed order so the witness is reproducible.
    bool deterministic = true;
    /// Re-verify the emitted cut at every leaf and throw std::logic_error on failure.
    bool check_leaves = false;
};

struct BranchResult {
    SolveStatus status = SolveStatus::No;
    std::optional<Cut> cut;
    BranchStats stats;
};

/*
 * Exact branching over a tripartition A, B, D. Seeds are unordered pairs
 * u < v started as A = {u}, B = {v}. Inside a node the reduction rules run in
 * the order R1, R2, R3, R4, then B1 or B2 branch; the vertex branched on and
 * its set X are always the lowest-numbered eligible choices. A node where no
 * rule applies yields (A + D, B).
 */
BranchResult solve_branching(const Graph& g, int d, const BranchOptions& options = {});

enum class BranchRule { B1, B2 };

/// Unique root in (1, 2] of x^(d+1) = (2^d - 1) x + 1 (B1) or x^d = 2^d - 1 (B2), by bisection.
double branching_factor(BranchRule rule, int d, double tolerance = 1e-9);

}  // namespace dcut
