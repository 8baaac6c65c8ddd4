#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gs/coloring.hpp"

namespace gs {

// Avoidance problem: color [1,n] with r colors so that no constrained triple
// is monochromatic (MonoOnly) or monochromatic-or-rainbow (MonoPlusRainbow).
struct SearchProblem {
    int r = 3;
    Relation rel = Relation::eq(0);
    enum class Mode { MonoOnly, MonoPlusRainbow } mode = Mode::MonoPlusRainbow;
    bool exact_required = false;

    std::string describe() const;
    std::uint64_t config_hash(int n) const;
};

struct Certificate {
    enum class Kind { Witness, Exhaustion, Unknown } kind = Kind::Unknown;
    std::optional<Coloring> witness;
    unsigned long long nodes_explored = 0;
    int n = 0;
    std::uint64_t config_hash = 0;
};

inline constexpr unsigned long long kDefaultNodeBudget = 1'000'000'000ULL;

// Full backtracking search over colorings of [1,n]. Integers are assigned in
// increasing order with forward-checked candidate masks; color symmetry is
// broken by canonical first-use order.
Certificate extremal(const SearchProblem& problem, int n,
                     unsigned long long node_budget = kDefaultNodeBudget);

struct NumberResult {
    enum class Status { Found, Unknown } status = Status::Unknown;
    int value = 0;              // least n >= first witness with Exhaustion
    int first_witness_n = 0;    // 0 if none seen
    int last_completed_n = 0;   // progress marker when Unknown
    unsigned long long nodes_total = 0;
};

// Scans n = 1, 2, ... and returns the least n at or beyond the first Witness
// for which the search exhausts. Tiny intervals can exhaust vacuously when
// exactness is required, so exhaustions before any witness are skipped.
NumberResult compute_number(const SearchProblem& problem,
                            unsigned long long node_budget = kDefaultNodeBudget,
                            int max_n = 200);

struct BoundChainReport {
    int r = 0;
    long long lower = 0;        // certified: verified witness length + 1
    int witness_length = 0;
    bool witness_verified = false;
    long long stanley_terms = 0;  // number of sequence terms used for the cap
    long long upper = 0;          // last Stanley term
    double f_value = 0.0;         // closed-form lower-bound target
    double growth_cap = 0.0;      // (43/4) * (3^(log2 sqrt 5))^r
    bool lower_le_upper = false;
};

// Certifies lower <= upper for the strict avoidance threshold on r colors:
// lower from an explicitly verified strict-avoiding coloring (nine-copy
// extension for r >= 5, the palindromic family itself for r in {3,4}),
// upper from the Stanley sequence cap.
BoundChainReport verify_bound_chain(int r);

}  // namespace gs
