#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gs/coloring.hpp"

namespace gs {

// Three-interval coloring parameters: color 0 on [1, floor(a*n)], color 1 on
// (floor(a*n), floor((a+b)*n)], color 2 on the rest.
struct IntervalSplit {
    double a = 0.0;
    double b = 0.0;
    std::optional<double> delta;  // when set, a >= delta, b >= delta, 1-a-b >= delta

    void validate() const;  // throws std::invalid_argument on violation
};

// The literal coloring of [1,n] described by the split.
Coloring interval_coloring(const IntervalSplit& split, long long n);

enum class CountKind { Mono, Rainbow, Both };

// Exact integer census of the literal three-interval coloring; the oracle
// every closed form below is tested against.
long long exact_count(long long n, const IntervalSplit& split, const Relation& rel,
                      CountKind which);

// Exact number of solutions to x+y<z with s <= x <= y < z <= t, and its
// cubic leading term (t-2s)^3/12 (zero when t <= 2s).
long long count_I(long long s, long long t);
double asymptotic_I(double s, double t);

// Leading-order densities (coefficient of n^3) for the three-interval family
// under x+y<z: monochromatic, rainbow, and their sum (the seven-case form).
double mono_poly(double a, double b);
double rainbow_poly(double a, double b);
double g_poly(double a, double b);

enum class DensityPoly { Mono, Rainbow, Gallai };
double eval_poly(DensityPoly which, double a, double b);

// Max absolute jump of the piecewise form across its internal region
// boundaries, sampled at `samples` points per boundary segment.
double continuity_gap(DensityPoly which, int samples = 100);

enum class Objective { Min, Max };

struct OptimizeResult {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    std::vector<std::pair<double, double>> optima;  // distinct points at the optimum
    unsigned long long evaluations = 0;
};

// Deterministic dense grid scan over the delta-shrunk simplex followed by
// compass-search refinement; `step` is the initial grid spacing.
OptimizeResult optimize(DensityPoly which, Objective objective, double delta = 0.0,
                        double step = 1e-3);

struct RegionMinimum {
    const char* region;
    double alpha = 0.0;
    double beta = 0.0;
    double value = 0.0;
};

struct Mono3Result {
    double value = 0.0;  // global minimum over the four regions
    std::vector<RegionMinimum> regions;
    double two_color_reference = 0.0;  // 1 / (12 (1+2*sqrt(2))^2)
};

// Minimizes the four-region leading-order objective for monochromatic triple
// density over three-class interval colorings.
Mono3Result mono3_min();

struct KThreshold {
    double k = 0.0;
    double k_sq_over_4 = 0.0;
};

// Root of k^2/2 - k^3/3 = c in (0,1) by bisection; throws if no root exists.
KThreshold solve_k_threshold(double c);

// True iff over all colorings of [lo, lo+n-1] with the given ascending class
// sizes the block-interval coloring attains the minimum number of
// monochromatic solutions to x+y<z. Exhaustive; n <= 14, up to 3 classes.
bool structural_min_check(long long lo, const std::vector<int>& sizes_sorted);

// Block-interval coloring for ascending class sizes and the count it attains.
Coloring block_coloring(long long lo, const std::vector<int>& sizes_sorted);
long long mono_lt_count(const Coloring& chi);

// max over nonnegative integers r, b with r+b <= n of r*b*(n-r-b)
double rm3_upper(long long n);
// (lower_const, upper_const) for the rainbow-count growth window
std::pair<double, double> rm3_bounds();

}  // namespace gs
