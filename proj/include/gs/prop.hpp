#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gs/coloring.hpp"

namespace gs {

// Candidate-color masks for the three classes: bit 0 = A, bit 1 = B,
// bit 2 = C.
inline constexpr std::uint8_t kMaskA = 1, kMaskB = 2, kMaskC = 4, kMaskFull = 7;

inline char class_letter(int color) { return static_cast<char>('A' + color); }

struct Deduction {
    int pos = 0;        // integer that got fixed
    int color = 0;      // 0=A, 1=B, 2=C
    int via_x = 0, via_y = 0, via_z = 0;  // forcing solution; zeros = assumption
};

// Per-integer candidate sets over [1, n] for solutions of x+y+b=z, x <= y.
struct DomainState {
    int n = 0;
    long long b = 0;
    std::vector<std::uint8_t> cand;  // index 1..n
    std::vector<Deduction> trail;
    bool contradiction = false;

    int fixed_color(int i) const;  // -1 if not a singleton
    int candidate_count(int i) const;
};

DomainState make_state(int n, long long b);

// Narrow all candidate sets to the fixpoint of the two rules applied to
// every solution (x, y, z) of x+y+b=z inside [1, n]:
//   (i)  two positions fixed to the same color  -> remove it from the third
//   (ii) two positions fixed to different colors -> third restricted to them
// Newly created singletons re-trigger; an empty set sets `contradiction`.
void propagate(DomainState& st);

// Fix x to color (0..2) and propagate; a color outside the candidate set is
// an immediate contradiction. x outside [1, n] throws.
void assume(DomainState& st, int x, int color);

struct Scenario {
    std::vector<std::pair<int, int>> seeds;  // (integer, color)
    bool expect_contradiction = false;
};

struct RowVerdict {
    int row = 0;
    bool expected_contradiction = false;
    bool contradiction = false;
    int depth = -1;        // splits needed; 0 = propagation alone
    bool depth0_contradiction = false;
    bool flagged = false;  // depth-0 outcome disagrees with the expected verdict
};

struct ReplayReport {
    int n = 0;
    long long b = 0;
    int max_split_depth = 0;
    std::vector<RowVerdict> rows;
    bool all_expected_met = true;  // every expected contradiction was found
    int flag_count = 0;
};

// Run each scenario: seeds, propagation, then case splits on a
// minimum-candidate-count integer (smallest index on ties) up to
// max_split_depth; Contradiction requires every branch to contradict.
ReplayReport replay(int n, long long b, const std::vector<Scenario>& scenarios,
                    int max_split_depth);

// The four replay tables, parameterized by k >= 5 (rows reference k-1, k,
// k+2, 2k-1, 2k+1, which must stay distinct from each other and from the
// base seeds). Tables a/c use b = 2k+1 on [1, 8k+9]; b/d use b = 2k on
// [1, 8k+10]. a/b seed {1, 2b+3, 4b+5} -> A, b+2 -> B, 3b+4 -> C; c/d seed
// 1 -> A, b+2 -> B, 2b+3 -> B, 3b+4 -> A, 4b+5 -> C.
struct TableScenarios {
    long long b = 0;
    int n = 0;
    std::vector<Scenario> rows;
};
TableScenarios table_scenarios(char table, int k);

struct ProveResult {
    enum class Status { Proved, Counterexample, Unknown } status = Status::Unknown;
    std::optional<Coloring> counterexample;
    unsigned long long nodes = 0;
};

// Complete search over exact 3-colorings of [1, n]: Proved means none
// avoids both monochromatic and rainbow solutions of x+y+b=z. Color
// symmetry is broken by canonical first-use order (1 gets A; each later
// integer may open at most the next unused class). The propagation rules
// above prune every branch.
ProveResult prove_upper(int n, long long b,
                        unsigned long long node_budget = 4'000'000'000ULL);

}  // namespace gs
