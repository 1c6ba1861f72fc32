#pragma once

#include <cstdint>

#include "eacws/conflict.hpp"

namespace eacws {

struct SearchBudget {
    std::uint64_t max_nodes = 0;   // 0 = unlimited
    std::uint64_t max_millis = 0;  // 0 = unlimited
};

struct SearchOptions {
    unsigned jobs = 1;  // worker threads for the bounding phase
    SearchBudget budget;
};

struct SearchResult {
    ClassicalCode code;  // includes the implicit all-zero word
    bool exact = false;  // optimality proved within budget
    std::uint64_t nodes = 0;
};

// Maximum clique in the Cayley graph on {0,1}^length whose edges avoid the
// forbidden differences, anchored at the all-zero word. Runs a coloring
// branch-and-bound for the optimal size, then a lexicographic witness pass,
// so exact completions return the lexicographically least maximum clique
// regardless of worker count. On budget exhaustion returns the best clique
// found with exact = false.
SearchResult max_clique_code(const ConflictSet& conflicts, const SearchOptions& opts = {});

}  // namespace eacws
