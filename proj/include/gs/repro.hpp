#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gs/search.hpp"

namespace gs {

// One reproduction recipe: a named end-to-end check with a frozen expected
// outcome. Ids 1..13 match the acceptance gate one-to-one.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;     // the numbers the recipe produced
    std::string note;       // set when the computed value overrides a claim
    double elapsed_ms = 0;
};

inline constexpr int kCriterionCount = 13;

// Stable slug for criterion `id` (1-based), e.g. "schur-numbers".
std::string criterion_name(int id);

// Resolve "c7", "7", or a slug to an id; 0 when unknown.
int criterion_id(const std::string& token);

// Run one recipe. `budget` caps search nodes; `seed` drives the randomized
// recipes (6 and 13). Throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(int id, unsigned long long budget = kDefaultNodeBudget,
                              std::uint64_t seed = 12345);

}  // namespace gs
