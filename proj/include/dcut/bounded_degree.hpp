#pragma once

#include <optional>
#include <string>

#include "dcut/graph.hpp"

namespace dcut {

enum class DegreeVerdict { Yes, No, NotApplicable };

struct DegreeResult {
    DegreeVerdict verdict = DegreeVerdict::NotApplicable;
    std::optional<Cut> cut;
    /// Which case of the ladder decided the instance, e.g. "tree" or "girth>=4".
    std::string reason;
};

/*
 * Decision for graphs with max degree at most d + 2 (NotApplicable otherwise).
 * Every Yes carries a cut that has been verified before returning. For d = 1
 * and n >= 8 the certificate comes from the branching solver, which is
 * guaranteed to find one on such inputs.
 */
DegreeResult solve_bounded_degree(const Graph& g, int d);

}  // namespace dcut
