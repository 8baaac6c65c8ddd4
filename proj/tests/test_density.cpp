#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "gs/density.hpp"

using namespace gs;

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kSqrt46 = 6.782329983125268;
}  // namespace

TEST_CASE("inequality solution counting") {
    CHECK(count_I(1, 5) == 7);
    CHECK(count_I(1, 2) == 0);
    CHECK(count_I(3, 6) == 0);  // t <= 2s
    CHECK(count_I(1, 8) == 34);
    CHECK(count_I(1, 101) == 84575);
    CHECK(asymptotic_I(1, 101) == doctest::Approx(99.0 * 99.0 * 99.0 / 12.0));
    CHECK(asymptotic_I(1, 101) == doctest::Approx(80858.25));
    CHECK(asymptotic_I(3, 6) == 0.0);
    CHECK_THROWS_AS(count_I(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(count_I(5, 4), std::invalid_argument);
}

TEST_CASE("interval coloring layout and validation") {
    IntervalSplit s{0.25, 0.5, std::nullopt};
    Coloring chi = interval_coloring(s, 8);
    CHECK(format_coloring(chi) == "11222233");
    CHECK(chi.num_colors == 3);

    IntervalSplit bad{0.7, 0.5, std::nullopt};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    IntervalSplit neg{-0.1, 0.5, std::nullopt};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
    IntervalSplit thin{0.05, 0.5, 0.1};  // a < delta
    CHECK_THROWS_AS(thin.validate(), std::invalid_argument);
    CHECK_THROWS_AS(interval_coloring(s, 0), std::invalid_argument);
}

TEST_CASE("exact counts for small intervals") {
    // all of [1,5] one color: 7 mono inequality solutions
    IntervalSplit all{1.0, 0.0, std::nullopt};
    CHECK(exact_count(5, all, Relation::lt(), CountKind::Mono) == 7);
    CHECK(exact_count(5, all, Relation::lt(), CountKind::Rainbow) == 0);
    CHECK(exact_count(5, all, Relation::lt(), CountKind::Both) == 7);

    // fewer than three classes can never produce a rainbow solution
    IntervalSplit two{0.5, 0.5, std::nullopt};
    CHECK(exact_count(100, two, Relation::lt(), CountKind::Rainbow) == 0);
}

TEST_CASE("closed forms track the exact counts at the equal split") {
    IntervalSplit third{1.0 / 3.0, 1.0 / 3.0, std::nullopt};
    const long long n = 3000;
    double cube = static_cast<double>(n) * n * n;
    double mono = static_cast<double>(exact_count(n, third, Relation::lt(), CountKind::Mono));
    double both = static_cast<double>(exact_count(n, third, Relation::lt(), CountKind::Both));
    CHECK(std::abs(mono / cube - mono_poly(1.0 / 3.0, 1.0 / 3.0)) < 5.0 / n);
    CHECK(std::abs(both / cube - 11.0 / 324.0) < 5.0 / n);
}

TEST_CASE("polynomial point values") {
    CHECK(g_poly(1.0, 0.0) == doctest::Approx(1.0 / 12.0));
    CHECK(g_poly(1.0 / 3.0, 1.0 / 3.0) == doctest::Approx(11.0 / 324.0));
    CHECK(mono_poly(0.2, 0.3) == doctest::Approx(0.00075));
    double a_star = (4.0 - kSqrt2) / 7.0;
    CHECK(g_poly(a_star, 0.0) ==
          doctest::Approx(3.0 / 196.0 - kSqrt2 / 147.0).epsilon(1e-12));
    CHECK(eval_poly(DensityPoly::Gallai, 0.2, 0.3) ==
          doctest::Approx(mono_poly(0.2, 0.3) + rainbow_poly(0.2, 0.3)));
}

TEST_CASE("piecewise forms are continuous across region boundaries") {
    CHECK(continuity_gap(DensityPoly::Mono) <= 1e-12);
    CHECK(continuity_gap(DensityPoly::Rainbow) <= 1e-12);
    CHECK(continuity_gap(DensityPoly::Gallai) <= 1e-12);
}

TEST_CASE("total equals mono plus rainbow everywhere") {
    std::mt19937_64 rng(8080);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        double a = u(rng);
        double b = u(rng) * (1.0 - a);
        double diff = std::abs(g_poly(a, b) - mono_poly(a, b) - rainbow_poly(a, b));
        REQUIRE(diff <= 1e-12);
    }
}

TEST_CASE("closed forms match the exact census on a parameter grid") {
    // 5x5 grid over the open simplex, n = 1000: relative-scale error < 5/n
    const long long n = 1000;
    double cube = static_cast<double>(n) * n * n;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            double a = i / 7.0;
            double b = j / 7.0;
            if (a + b >= 1.0) continue;
            IntervalSplit s{a, b, std::nullopt};
            double mono = static_cast<double>(
                exact_count(n, s, Relation::lt(), CountKind::Mono));
            double both = static_cast<double>(
                exact_count(n, s, Relation::lt(), CountKind::Both));
            CAPTURE(a);
            CAPTURE(b);
            REQUIRE(std::abs(mono / cube - mono_poly(a, b)) < 5.0 / n);
            REQUIRE(std::abs(both / cube - g_poly(a, b)) < 5.0 / n);
        }
}

TEST_CASE("oracle convergence is first order on the reference grid") {
    // {0.1,...,0.5}^2, three interval sizes: the scaled census approaches the
    // closed form like K/n with a small constant
    for (long long n : {500LL, 1000LL, 2000LL}) {
        double cube = static_cast<double>(n) * n * n;
        double worst = 0.0;
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                double a = i / 10.0;
                double b = j / 10.0;
                IntervalSplit s{a, b, std::nullopt};
                double both = static_cast<double>(
                    exact_count(n, s, Relation::lt(), CountKind::Both));
                worst = std::max(worst, std::abs(both / cube - g_poly(a, b)));
            }
        CAPTURE(n);
        REQUIRE(worst <= 5.0 / static_cast<double>(n));
        REQUIRE(static_cast<double>(n) * worst <= 0.2);  // measured constant 0.091
    }
}

TEST_CASE("global minimum of the total-density form") {
    OptimizeResult res = optimize(DensityPoly::Gallai, Objective::Min);
    double expect = 3.0 / 196.0 - kSqrt2 / 147.0;
    CHECK(res.value == doctest::Approx(expect).epsilon(1e-8));
    // attained on the boundary at a = (4 - sqrt 2)/7 with one class empty,
    // in three symmetric placements
    CHECK(res.optima.size() >= 2);
    bool found_canonical = false;
    for (auto [a, b] : res.optima)
        if (std::abs(a - (4.0 - kSqrt2) / 7.0) < 1e-6 && std::abs(b) < 1e-6)
            found_canonical = true;
    CHECK(found_canonical);
}

TEST_CASE("global maximum of the rainbow form") {
    OptimizeResult res = optimize(DensityPoly::Rainbow, Objective::Max);
    CHECK(res.value == doctest::Approx((3.0 * kSqrt3 - 5.0) / 6.0).epsilon(1e-8));
    CHECK(res.a == doctest::Approx(2.0 - kSqrt3).epsilon(1e-6));
    CHECK(res.b == doctest::Approx((kSqrt3 - 1.0) / 2.0).epsilon(1e-6));
}

TEST_CASE("constrained minimum with a thickness floor") {
    OptimizeResult res = optimize(DensityPoly::Gallai, Objective::Min, 0.1);
    double expect = 5501.0 / 294000.0 - 23.0 * kSqrt46 / 147000.0;
    CHECK(res.value == doctest::Approx(expect).epsilon(1e-8));
    CHECK(res.a == doctest::Approx((26.0 - kSqrt46) / 70.0).epsilon(1e-6));
    CHECK(res.b == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("optimizer certificate: halving the step does not move the value") {
    OptimizeResult coarse = optimize(DensityPoly::Gallai, Objective::Min, 0.0, 1e-3);
    OptimizeResult fine = optimize(DensityPoly::Gallai, Objective::Min, 0.0, 5e-4);
    CHECK(std::abs(coarse.value - fine.value) < 1e-10);
}

TEST_CASE("four-region monochromatic minimum") {
    Mono3Result res = mono3_min();
    REQUIRE(res.regions.size() == 4);
    CHECK(res.value == doctest::Approx((89.0 - 36.0 * kSqrt2) / 63948.0).epsilon(1e-8));

    // per-region minima
    CHECK(res.regions[0].value ==
          doctest::Approx((89.0 - 36.0 * kSqrt2) / 63948.0).epsilon(1e-8));
    CHECK(res.regions[1].value ==
          doctest::Approx((9.0 - 4.0 * kSqrt2) / 4704.0).epsilon(1e-8));
    CHECK(res.regions[2].value == doctest::Approx(1.0 / 972.0).epsilon(1e-8));
    CHECK(res.regions[3].value == doctest::Approx(1.0 / 768.0).epsilon(1e-8));
    CHECK(res.regions[2].alpha == doctest::Approx(2.0 / 9.0).epsilon(1e-6));
    CHECK(res.regions[3].alpha == doctest::Approx(0.25).epsilon(1e-6));

    // reference: the two-class constant equals the unconstrained total minimum
    double gmin = 3.0 / 196.0 - kSqrt2 / 147.0;
    CHECK(std::abs(res.two_color_reference - gmin) <= 1e-12);
    CHECK(res.two_color_reference ==
          doctest::Approx(1.0 / (12.0 * (1.0 + 2.0 * kSqrt2) * (1.0 + 2.0 * kSqrt2))));
}

TEST_CASE("cubic threshold solving") {
    KThreshold k150 = solve_k_threshold(1.0 / 150.0);
    CHECK(k150.k == doctest::Approx(0.120403454865).epsilon(1e-9));
    CHECK(k150.k_sq_over_4 == doctest::Approx(0.003624247986).epsilon(1e-9));

    KThreshold k1331 = solve_k_threshold(1.0 / 1331.0);
    CHECK(k1331.k == doctest::Approx(0.0392815248860).epsilon(1e-9));
    // the quarter-square clears the doubled reciprocal: room for one more class
    CHECK(k1331.k_sq_over_4 > 1.0 / 2662.0);

    CHECK_THROWS_AS(solve_k_threshold(0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_k_threshold(1.0), std::domain_error);  // exceeds 1/6
}

TEST_CASE("block colorings minimize the monochromatic inequality count") {
    Coloring blocks = block_coloring(1, {2, 3, 5});
    CHECK(blocks.size() == 10);
    CHECK(blocks.values[0] == 0);
    CHECK(blocks.values[2] == 1);
    CHECK(blocks.values[5] == 2);
    CHECK(mono_lt_count(blocks) >= 0);

    CHECK(structural_min_check(1, {2, 3, 5}));
    CHECK(structural_min_check(1, {1, 4, 5}));
    CHECK(structural_min_check(4, {3, 3, 4}));
    CHECK(structural_min_check(1, {5, 5}));

    CHECK_THROWS_AS(structural_min_check(1, {3, 2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(structural_min_check(1, {0, 2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(structural_min_check(1, {4, 5, 6}), std::invalid_argument);
    CHECK_THROWS_AS(block_coloring(1, {1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("rainbow growth window") {
    CHECK(rm3_upper(27) == doctest::Approx(729.0));
    CHECK(rm3_upper(3) == doctest::Approx(1.0));
    auto [lo, hi] = rm3_bounds();
    CHECK(hi == doctest::Approx(1.0 / 27.0));
    CHECK(lo == doctest::Approx(std::max((3.0 * kSqrt3 - 5.0) / 6.0, 1.0 / 31.0)));
    CHECK(lo <= hi);
}
