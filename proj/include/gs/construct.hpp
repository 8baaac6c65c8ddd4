#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gs/coloring.hpp"

namespace gs {

enum class ClaimedProperty {
    GallaiSchur,
    StrictGallaiSchur,
    PalindromicGallaiSchur,
    AvoidsMonoRainbowForB,
};

// A constructed coloring together with its validity claim. `checked` says
// whether the census verification ran (it auto-runs for outputs up to
// `kVerifyCap` integers); `verified` is meaningful only when checked.
struct ConstructionReport {
    Coloring output;
    long long claimed_length = 0;
    ClaimedProperty claimed_property = ClaimedProperty::GallaiSchur;
    long long b = 0;  // used by AvoidsMonoRainbowForB
    bool checked = false;
    bool verified = false;
};

inline constexpr int kVerifyCap = 2000;

// Concatenation operators over a base coloring chi of length n using r
// colors; separators take fresh color ids.
//   star:        <chi, r, chi>                                  length 2n+1
//   psi:         <chi, r, chi, r+1, chi, r+1, chi>              length 4n+3
//   double star: <chi, r, chi, r+1, chi, r+1, chi, r, chi>      length 5n+4
//   plus:        nine copies, separator sequence r,r,r+1,r,r+1,r+1,r+1,r
//                                                                length 9n+8
// star/psi/double_star require a palindromic Gallai-Schur input; plus
// additionally requires r >= 3. Violations throw std::invalid_argument
// unless force is set.
Coloring star_extend(const Coloring& chi, bool force = false);
Coloring psi_extend(const Coloring& chi, bool force = false);
Coloring double_star_extend(const Coloring& chi, bool force = false);
Coloring plus_extend(const Coloring& chi, bool force = false);

// The iterated family: r=2 -> "1221"; even r -> double_star chain from it;
// odd r -> star of the even member. Length 5^k - 1 for r = 2k and
// 2*5^k - 1 for r = 2k+1.
Coloring palindromic_family(int r);

// Exact 3-coloring of [1, n(b)-1] with census(eq, b) = (0, 0):
//   b = 1            explicit classes {1,4,7,10}, {2,9}, {3,5,6,8} on [1,10]
//   b = 2k  (even)   on [1, 8k+9]: odd -> 0; even in [2k+4, 6k+6] -> 2; else 1
//   b = 2k+1 (odd)   on [1, 8k+8]: even -> 1; odd in [2k+3, 6k+5] -> 2; else 0
Coloring nb_lower_coloring(long long b);

// Three-class coloring of [1, n], 44 | n: color 0 on [1, 2n/11] and
// (5n/11, n/2]; color 1 on (2n/11, 5n/11]; color 2 on (n/2, n].
Coloring rz_coloring(long long n);

// First n non-negative integers whose ternary digits are all 0/1 (the i-th
// term is i-1 written in binary, read in base 3). Strictly increasing and
// free of 3-term arithmetic progressions.
std::vector<long long> stanley_sequence(int n);

// Verify a construction claim with the core census (skipped above the cap).
ConstructionReport make_report(const Coloring& output, ClaimedProperty prop, long long b = 0,
                               int verify_cap = kVerifyCap);

std::string property_name(ClaimedProperty p);

}  // namespace gs
