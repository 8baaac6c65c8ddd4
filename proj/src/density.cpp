#include "gs/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gs {

void IntervalSplit::validate() const {
    if (!(a >= 0.0) || !(b >= 0.0) || !(a + b <= 1.0 + 1e-15))
        throw std::invalid_argument("IntervalSplit: need a, b >= 0 and a + b <= 1");
    if (delta) {
        double d = *delta;
        if (!(d >= 0.0) || !(d <= 1.0 / 3.0 + 1e-15))
            throw std::invalid_argument("IntervalSplit: delta must lie in [0, 1/3]");
        if (a < d - 1e-15 || b < d - 1e-15 || 1.0 - a - b < d - 1e-15)
            throw std::invalid_argument("IntervalSplit: all three classes must have size >= delta");
    }
}

Coloring interval_coloring(const IntervalSplit& split, long long n) {
    split.validate();
    if (n < 1) throw std::invalid_argument("interval_coloring: n >= 1 required");
    long long p = static_cast<long long>(split.a * static_cast<double>(n));
    long long q = static_cast<long long>((split.a + split.b) * static_cast<double>(n));
    Coloring chi;
    chi.lo = 1;
    chi.num_colors = 3;
    chi.values.resize(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i)
        chi.values[static_cast<size_t>(i - 1)] = i <= p ? 0 : (i <= q ? 1 : 2);
    return chi;
}

long long exact_count(long long n, const IntervalSplit& split, const Relation& rel,
                      CountKind which) {
    if (n < 3) throw std::invalid_argument("exact_count: n >= 3 required");
    TripleCensus c = census(interval_coloring(split, n), rel);
    switch (which) {
        case CountKind::Mono: return c.mono;
        case CountKind::Rainbow: return c.rainbow;
        default: return c.mono + c.rainbow;
    }
}

long long count_I(long long s, long long t) {
    if (s < 1 || t < s) throw std::invalid_argument("count_I: 1 <= s <= t required");
    long long total = 0;
    for (long long x = s; x <= t; ++x) {
        if (2 * x >= t) break;
        for (long long y = x; y <= t; ++y) {
            long long room = t - (x + y);
            if (room <= 0) break;
            total += room;
        }
    }
    return total;
}

double asymptotic_I(double s, double t) {
    if (t <= 2.0 * s) return 0.0;
    double d = t - 2.0 * s;
    return d * d * d / 12.0;
}

namespace {

double cube(double v) { return v * v * v; }

// Case formulas for each piecewise family, defined once; the dispatchers
// below pick by predicate, the continuity check compares adjacent formulas
// directly at shared boundary points.

double mono_c1(double a, double b) { return (cube(a) + cube(b - a)) / 12.0; }  // a<b, a+b>1/2
double mono_c2(double a, double b) {  // a<b, a+b<=1/2
    return (cube(a) + cube(b - a) + cube(1.0 - 2.0 * (a + b))) / 12.0;
}
double mono_c3(double a, double) { return cube(a) / 12.0; }  // a>=b, a+b>1/2
double mono_c4(double a, double b) {  // a>=b, a+b<=1/2
    return (cube(a) + cube(1.0 - 2.0 * (a + b))) / 12.0;
}

double g_c1(double a, double b) {  // a>=b, a+b<=1/2
    return (1 - 6 * a + 12 * a * a - 7 * cube(a) - 6 * b + 36 * a * b - 42 * a * a * b +
            12 * b * b - 30 * a * b * b - 10 * cube(b)) /
           12.0;
}
double g_c2(double a, double b) {  // a<b, a+b<=1/2
    return (1 - 6 * a + 12 * a * a - 10 * cube(a) - 6 * b + 36 * a * b - 33 * a * a * b +
            12 * b * b - 39 * a * b * b - 7 * cube(b)) /
           12.0;
}
double g_c3(double a, double b) {  // a>=b, a+b>1/2, 2a+b<=1
    return (cube(a) + 12 * a * b - 18 * a * a * b - 6 * a * b * b - 2 * cube(b)) / 12.0;
}
double g_c4(double a, double b) {  // a<b, a+b>1/2, 2a+b<=1
    return (-2 * cube(a) + 12 * a * b - 9 * a * a * b - 15 * a * b * b + cube(b)) / 12.0;
}
double g_c5(double a, double b) {  // a>=b, a>=1/2, a+b<=1
    return (cube(a) + 6 * b - 12 * a * b + 6 * a * a * b - 6 * b * b + 6 * a * b * b) / 12.0;
}
double g_c6(double a, double b) {  // a>=b, a<1/2, 2a+b>1
    return (12 * a - 24 * a * a + 17 * cube(a) + 6 * b - 12 * a * b + 6 * a * a * b -
            6 * b * b + 6 * a * b * b - 2) /
           12.0;
}
double g_c7(double a, double b) {  // a<b, a+b<=1, 2a+b>1
    return (12 * a - 24 * a * a + 14 * cube(a) + 6 * b - 12 * a * b + 15 * a * a * b -
            6 * b * b - 3 * a * b * b + 3 * cube(b) - 2) /
           12.0;
}

double rain_t1(double a, double b) {  // a<b, 2a+b<1
    return a * b * (1 - a - b) - cube(a) / 6.0;
}
double rain_t2(double a, double b) {  // a<b, 2a+b>=1
    return a - 2 * a * a + (7.0 / 6.0) * cube(a) + b / 2.0 - a * b + a * a * b -
           b * b / 2.0 + cube(b) / 6.0 - 1.0 / 6.0;
}
double rain_t3(double a, double b) {  // a>=b, 2a>1
    return b * (1 - a) * (1 - a - b) / 2.0;
}
double rain_t4(double a, double b) {  // a>=b, 2a+b<=1
    return a * b - 1.5 * a * a * b - 0.5 * a * b * b - cube(b) / 6.0;
}
double rain_t5(double a, double b) {  // a>=b, 2a<=1<2a+b
    return a - 2 * a * a + (4.0 / 3.0) * cube(a) + b / 2.0 - a * b + a * a * b / 2.0 -
           b * b / 2.0 + a * b * b / 2.0 - 1.0 / 6.0;
}

// Closed-region membership with slack, for the boundary-agreement check.
struct PieceCase {
    double (*val)(double, double);
    bool (*in)(double, double, double);
};

const PieceCase kMonoCases[] = {
    {mono_c1, [](double a, double b, double s) { return a <= b + s && a + b >= 0.5 - s; }},
    {mono_c2, [](double a, double b, double s) { return a <= b + s && a + b <= 0.5 + s; }},
    {mono_c3, [](double a, double b, double s) { return a >= b - s && a + b >= 0.5 - s; }},
    {mono_c4, [](double a, double b, double s) { return a >= b - s && a + b <= 0.5 + s; }},
};

const PieceCase kGCases[] = {
    {g_c1, [](double a, double b, double s) { return a >= b - s && a + b <= 0.5 + s; }},
    {g_c2, [](double a, double b, double s) { return a <= b + s && a + b <= 0.5 + s; }},
    {g_c3,
     [](double a, double b, double s) {
         return a >= b - s && a + b >= 0.5 - s && 2 * a + b <= 1 + s;
     }},
    {g_c4,
     [](double a, double b, double s) {
         return a <= b + s && a + b >= 0.5 - s && 2 * a + b <= 1 + s;
     }},
    {g_c5,
     [](double a, double b, double s) { return a >= b - s && a >= 0.5 - s && a + b <= 1 + s; }},
    {g_c6,
     [](double a, double b, double s) { return a >= b - s && a <= 0.5 + s && 2 * a + b >= 1 - s; }},
    {g_c7,
     [](double a, double b, double s) { return a <= b + s && a + b <= 1 + s && 2 * a + b >= 1 - s; }},
};

const PieceCase kRainCases[] = {
    {rain_t1, [](double a, double b, double s) { return a <= b + s && 2 * a + b <= 1 + s; }},
    {rain_t2, [](double a, double b, double s) { return a <= b + s && 2 * a + b >= 1 - s; }},
    {rain_t3, [](double a, double b, double s) { return a >= b - s && 2 * a >= 1 - s; }},
    {rain_t4, [](double a, double b, double s) { return a >= b - s && 2 * a + b <= 1 + s; }},
    {rain_t5,
     [](double a, double b, double s) { return a >= b - s && 2 * a <= 1 + s && 2 * a + b >= 1 - s; }},
};

}  // namespace

double mono_poly(double a, double b) {
    if (a < b) return a + b > 0.5 ? mono_c1(a, b) : mono_c2(a, b);
    return a + b > 0.5 ? mono_c3(a, b) : mono_c4(a, b);
}

double g_poly(double a, double b) {
    if (a >= b && a + b <= 0.5) return g_c1(a, b);
    if (a < b && a + b <= 0.5) return g_c2(a, b);
    if (a >= b && a + b > 0.5 && 2 * a + b <= 1) return g_c3(a, b);
    if (a < b && a + b > 0.5 && 2 * a + b <= 1) return g_c4(a, b);
    if (a >= b && a >= 0.5 && a + b <= 1) return g_c5(a, b);
    if (a >= b && a < 0.5 && 2 * a + b > 1) return g_c6(a, b);
    return g_c7(a, b);
}

double rainbow_poly(double a, double b) {
    if (a < b) return 2 * a + b < 1 ? rain_t1(a, b) : rain_t2(a, b);
    if (2 * a > 1) return rain_t3(a, b);
    if (2 * a + b <= 1) return rain_t4(a, b);
    return rain_t5(a, b);
}

double eval_poly(DensityPoly which, double a, double b) {
    switch (which) {
        case DensityPoly::Mono: return mono_poly(a, b);
        case DensityPoly::Rainbow: return rainbow_poly(a, b);
        default: return g_poly(a, b);
    }
}

double continuity_gap(DensityPoly which, int samples) {
    if (samples < 2) throw std::invalid_argument("continuity_gap: samples >= 2");
    const PieceCase* cases;
    size_t count;
    switch (which) {
        case DensityPoly::Mono: cases = kMonoCases; count = std::size(kMonoCases); break;
        case DensityPoly::Rainbow: cases = kRainCases; count = std::size(kRainCases); break;
        default: cases = kGCases; count = std::size(kGCases); break;
    }
    const double slack = 1e-12;
    double worst = 0.0;
    auto probe = [&](double a, double b) {
        if (a < -slack || b < -slack || a + b > 1 + slack) return;
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (size_t i = 0; i < count; ++i)
            if (cases[i].in(a, b, slack)) {
                double v = cases[i].val(a, b);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        if (hi >= lo) worst = std::max(worst, hi - lo);
    };
    for (int i = 0; i <= samples; ++i) {
        double t = static_cast<double>(i) / samples;
        probe(t / 2.0, t / 2.0);              // a = b diagonal
        probe(t * 0.5, 0.5 - t * 0.5);        // a + b = 1/2
        probe((1.0 - t) / 2.0, t);            // 2a + b = 1
        probe(0.5, t / 2.0);                  // a = 1/2
        probe(t, 1.0 - t);                    // a + b = 1 outer edge
    }
    return worst;
}

namespace {

struct Simplex {
    double delta;
    bool feasible(double a, double b) const {
        return a >= delta - 1e-15 && b >= delta - 1e-15 && 1.0 - a - b >= delta - 1e-15;
    }
    // clamp onto the feasible triangle, preferring to preserve `a`
    std::pair<double, double> clamp(double a, double b) const {
        a = std::clamp(a, delta, 1.0 - 2.0 * delta);
        b = std::clamp(b, delta, 1.0 - delta - a);
        return {a, b};
    }
};

}  // namespace

OptimizeResult optimize(DensityPoly which, Objective objective, double delta, double step) {
    if (delta < 0.0 || delta > 1.0 / 3.0)
        throw std::invalid_argument("optimize: delta must lie in [0, 1/3]");
    if (step <= 0.0 || step > 0.25) throw std::invalid_argument("optimize: bad step");
    const double sign = objective == Objective::Min ? 1.0 : -1.0;
    Simplex box{delta};
    OptimizeResult res;
    auto eval = [&](double a, double b) {
        ++res.evaluations;
        return sign * eval_poly(which, a, b);
    };

    // dense grid including the simplex boundary; track near-best cells
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> seeds;
    long long steps_a = std::llround((1.0 - 3.0 * delta) / step);
    for (long long i = 0; i <= steps_a; ++i) {
        double a = delta + (1.0 - 3.0 * delta) * static_cast<double>(i) / std::max<long long>(steps_a, 1);
        double bmax = 1.0 - delta - a;
        long long steps_b = std::llround((bmax - delta) / step);
        for (long long j = 0; j <= steps_b; ++j) {
            double b = delta + (bmax - delta) * static_cast<double>(j) / std::max<long long>(steps_b, 1);
            double v = eval(a, b);
            if (v < best - 1e-12) {
                best = v;
                seeds.clear();
                seeds.push_back({a, b});
            } else if (v < best + 4.0 * step * step + 1e-12) {
                seeds.push_back({a, b});
            }
        }
    }

    // compass-search refinement from every near-best seed
    static constexpr double kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                           {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    double global = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> refined;
    for (auto [sa, sb] : seeds) {
        double a = sa, b = sb, v = eval(a, b);
        for (double h = step; h > 1e-13;) {
            bool moved = false;
            for (auto& d : kDirs) {
                auto [na, nb] = box.clamp(a + h * d[0], b + h * d[1]);
                double nv = eval(na, nb);
                if (nv < v - 1e-18) {
                    a = na;
                    b = nb;
                    v = nv;
                    moved = true;
                    break;
                }
            }
            if (!moved) h *= 0.5;
        }
        if (v < global - 1e-10) {
            global = v;
            refined.clear();
        }
        if (v < global + 1e-10) {
            bool dup = false;
            for (auto [ra, rb] : refined)
                if (std::abs(ra - a) < 1e-6 && std::abs(rb - b) < 1e-6) dup = true;
            if (!dup) refined.push_back({a, b});
        }
    }

    // canonical representative: smallest b, then smallest a
    std::sort(refined.begin(), refined.end(),
              [](const std::pair<double, double>& p, const std::pair<double, double>& q) {
                  return p.second != q.second ? p.second < q.second : p.first < q.first;
              });
    res.value = sign * global;
    res.optima = refined;
    res.a = refined.empty() ? 0.0 : refined.front().first;
    res.b = refined.empty() ? 0.0 : refined.front().second;
    return res;
}

namespace {

// Four-region objective pieces for the three-class monochromatic minimum;
// feasibility predicates mirror the region definitions.
struct Mono3Region {
    const char* name;
    bool (*ok)(double, double);
    double (*f)(double, double);
};

const Mono3Region kMono3Regions[4] = {
    {"alpha<=beta, 2(alpha+beta)<=1",
     [](double x, double y) { return x >= 0 && x <= y && 2 * (x + y) <= 1; },
     [](double x, double y) { return (cube(x) + cube(y - x) + cube(1 - 2 * x - 2 * y)) / 12.0; }},
    {"alpha<=beta, 2(alpha+beta)>=1, alpha+2beta<=1",
     [](double x, double y) { return x >= 0 && x <= y && 2 * (x + y) >= 1 && x + 2 * y <= 1; },
     [](double x, double y) { return (cube(x) + cube(y - x)) / 12.0; }},
    {"beta<=alpha, 2(alpha+beta)<=1",
     [](double x, double y) { return y >= 0 && y <= x && 2 * (x + y) <= 1; },
     [](double x, double y) { return (cube(x) + cube(1 - 2 * x - 2 * y)) / 12.0; }},
    {"beta<=alpha, 2(alpha+beta)>=1, alpha+beta<=1",
     [](double x, double y) { return y >= 0 && y <= x && 2 * (x + y) >= 1 && x + y <= 1; },
     [](double x, double) { return cube(x) / 12.0; }},
};

}  // namespace

Mono3Result mono3_min() {
    Mono3Result out;
    out.two_color_reference = 1.0 / (12.0 * std::pow(1.0 + 2.0 * std::sqrt(2.0), 2.0));
    out.value = std::numeric_limits<double>::infinity();
    static constexpr double kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                           {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    for (const Mono3Region& reg : kMono3Regions) {
        double best = std::numeric_limits<double>::infinity();
        double ba = 0, bb = 0;
        const double step = 1e-3;
        for (double x = 0.0; x <= 1.0 + 1e-12; x += step)
            for (double y = 0.0; y <= 1.0 - x + 1e-12; y += step)
                if (reg.ok(x, y) && reg.f(x, y) < best) {
                    best = reg.f(x, y);
                    ba = x;
                    bb = y;
                }
        for (double h = step; h > 1e-13;) {
            bool moved = false;
            for (auto& d : kDirs) {
                double na = ba + h * d[0], nb = bb + h * d[1];
                if (reg.ok(na, nb) && reg.f(na, nb) < best - 1e-18) {
                    ba = na;
                    bb = nb;
                    best = reg.f(na, nb);
                    moved = true;
                    break;
                }
            }
            if (!moved) h *= 0.5;
        }
        out.regions.push_back({reg.name, ba, bb, best});
        out.value = std::min(out.value, best);
    }
    return out;
}

KThreshold solve_k_threshold(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("solve_k_threshold: c > 0 required");
    auto phi = [](double k) { return k * k / 2.0 - k * k * k / 3.0; };
    if (phi(1.0) < c) throw std::domain_error("solve_k_threshold: no root in (0,1)");
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (phi(mid) < c ? lo : hi) = mid;
    }
    KThreshold out;
    out.k = 0.5 * (lo + hi);
    out.k_sq_over_4 = out.k * out.k / 4.0;
    return out;
}

Coloring block_coloring(long long lo, const std::vector<int>& sizes_sorted) {
    if (sizes_sorted.empty() || sizes_sorted.size() > 3)
        throw std::invalid_argument("block_coloring: 1..3 class sizes required");
    if (!std::is_sorted(sizes_sorted.begin(), sizes_sorted.end()))
        throw std::invalid_argument("block_coloring: sizes must be ascending");
    Coloring chi;
    chi.lo = static_cast<int>(lo);
    chi.num_colors = static_cast<int>(sizes_sorted.size());
    for (int c = 0; c < static_cast<int>(sizes_sorted.size()); ++c) {
        if (sizes_sorted[static_cast<size_t>(c)] < 1)
            throw std::invalid_argument("block_coloring: class sizes must be positive");
        chi.values.insert(chi.values.end(), static_cast<size_t>(sizes_sorted[static_cast<size_t>(c)]), c);
    }
    if (chi.values.empty()) throw std::invalid_argument("block_coloring: empty coloring");
    return chi;
}

long long mono_lt_count(const Coloring& chi) { return census(chi, Relation::lt()).mono; }

bool structural_min_check(long long lo, const std::vector<int>& sizes_sorted) {
    Coloring block = block_coloring(lo, sizes_sorted);
    int n = block.size();
    if (n > 14) throw std::invalid_argument("structural_min_check: n <= 14 required");
    long long block_count = mono_lt_count(block);
    std::vector<int> values = block.values;  // ascending blocks = lexicographic minimum
    long long best = block_count;
    Coloring probe;
    probe.lo = block.lo;
    probe.num_colors = block.num_colors;
    do {
        probe.values = values;
        best = std::min(best, mono_lt_count(probe));
        if (best < block_count) return false;
    } while (std::next_permutation(values.begin(), values.end()));
    return best == block_count;
}

double rm3_upper(long long n) {
    if (n < 0) throw std::invalid_argument("rm3_upper: n >= 0 required");
    long long best = 0;
    for (long long r = 0; r <= n; ++r)
        for (long long b = 0; r + b <= n; ++b)
            best = std::max(best, r * b * (n - r - b));
    return static_cast<double>(best);
}

std::pair<double, double> rm3_bounds() {
    double rainbow_const = (3.0 * std::sqrt(3.0) - 5.0) / 6.0;
    return {std::max(rainbow_const, 1.0 / 31.0), 1.0 / 27.0};
}

}  // namespace gs
