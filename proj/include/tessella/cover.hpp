#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tessella/common.hpp"

namespace tessella {

/// Exact cover with multiplicity: select a subset of candidates so every
/// cell's coverage count lands in [lo, hi] (exact counts when lo == hi).
struct CoverProblem {
    int num_cells = 0;
    std::vector<int> lo, hi;
    std::vector<std::vector<std::pair<int, int>>> cand; // candidate -> (cell, mult)
};

struct CoverResult {
    bool feasible = false;
    bool aborted = false; // node budget exhausted before a verdict
    std::vector<int> chosen;
};

/// Backtracking with fail-first cell selection (fewest active candidates
/// among unsatisfied cells).  Deterministic; candidates are tried in id order.
CoverResult solve_cover(const CoverProblem& p, std::uint64_t node_budget = UINT64_MAX);

}  // namespace tessella
