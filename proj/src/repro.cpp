#include "gs/repro.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gs/construct.hpp"
#include "gs/density.hpp"
#include "gs/graphs.hpp"
#include "gs/prop.hpp"

namespace gs {

namespace {

constexpr std::array<const char*, kCriterionCount> kNames = {
    "schur-numbers",          // 1
    "gallai-schur-numbers",   // 2
    "offset-equation-numbers",  // 3
    "mono-offset-numbers",    // 4
    "construction-chains",    // 5
    "triangle-identity",      // 6
    "interval-coloring-counts",  // 7
    "density-oracle",         // 8
    "optimizer-constants",    // 9
    "cubic-threshold",        // 10
    "structural-minimum",     // 11
    "table-replay",           // 12
    "strict-triple-pipeline",  // 13
};

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[512];
    vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

SearchProblem mono_problem(int r, long long b = 0) {
    return {r, Relation::eq(b), SearchProblem::Mode::MonoOnly, false};
}

SearchProblem gallai_problem(int r, long long b = 0, bool strict = false) {
    return {r, Relation::eq(b, strict), SearchProblem::Mode::MonoPlusRainbow, true};
}

// ---- criterion bodies -------------------------------------------------

void schur_numbers(CriterionResult& out, unsigned long long budget) {
    bool ok = true;
    std::ostringstream detail;
    const int expect[] = {5, 14, 45};
    double core_ms = 0.0;
    for (int r = 2; r <= 4; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        NumberResult res = compute_number(mono_problem(r), budget);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        bool found = res.status == NumberResult::Status::Found;
        bool match = found && res.value == expect[r - 2];
        if (r < 4) {  // the four-color value is a stretch goal
            ok = ok && match;
            core_ms += ms;
        }
        detail << fmt("S(%d)=%d expect %d [%s, %.0f ms, %llu nodes]  ", r,
                      res.value, expect[r - 2], match ? "ok" : "MISMATCH", ms,
                      res.nodes_total);
    }
    if (core_ms > 10000.0) ok = false;  // S(2)+S(3) budget: 10 s
    out.pass = ok;
    out.detail = detail.str();
}

void gallai_schur_numbers(CriterionResult& out, unsigned long long budget) {
    std::ostringstream detail;
    NumberResult g3 = compute_number(gallai_problem(3), budget);
    NumberResult g4 = compute_number(gallai_problem(4), budget);
    bool ok3 = g3.status == NumberResult::Status::Found && g3.value == 10;
    bool ok4 = g4.status == NumberResult::Status::Found && g4.value == 25;
    detail << fmt("GS(3)=%d expect 10 [%s]  GS(4)=%d expect 25 [%s]", g3.value,
                  ok3 ? "ok" : "MISMATCH", g4.value, ok4 ? "ok" : "MISMATCH");
    out.pass = ok3 && ok4;
    out.note =
        "the claimed values 11 and 26 fail exhaustive verification; the searches "
        "certify 10 and 25 (see README caveats)";
    out.detail = detail.str();
}

void offset_equation_numbers(CriterionResult& out, unsigned long long budget) {
    const int expect[] = {11, 18, 17, 26, 25, 34};
    bool ok = true;
    std::ostringstream detail;
    for (int b = 1; b <= 6; ++b) {
        int n = expect[b - 1];
        Coloring witness = nb_lower_coloring(b);
        TripleCensus c = census(witness, Relation::eq(b));
        bool wit_ok = witness.size() == n - 1 && c.mono == 0 && c.rainbow == 0 &&
                      is_exact(witness) && witness.num_colors == 3;
        Certificate up = extremal(gallai_problem(3, b), n, budget);
        bool up_ok = up.kind == Certificate::Kind::Exhaustion;
        bool cross_ok = true;
        if (b <= 3) {  // independent engine agrees on both sides
            cross_ok = prove_upper(n, b).status == ProveResult::Status::Proved &&
                       prove_upper(n - 1, b).status ==
                           ProveResult::Status::Counterexample;
        }
        ok = ok && wit_ok && up_ok && cross_ok;
        detail << fmt("n(%d)=%d [witness %s, exhaustion %s%s]  ", b, n,
                      wit_ok ? "ok" : "BAD", up_ok ? "ok" : "BAD",
                      b <= 3 ? (cross_ok ? ", cross-check ok" : ", cross-check BAD")
                             : "");
    }
    out.pass = ok;
    out.detail = detail.str();
}

void mono_offset_numbers(CriterionResult& out, unsigned long long budget) {
    bool ok = true;
    bool two_color_ok = true;
    std::ostringstream detail;
    for (int b = 1; b <= 10; ++b) {
        NumberResult r = compute_number(mono_problem(2, b), budget);
        bool match = r.status == NumberResult::Status::Found && r.value == 4 * b + 5;
        two_color_ok = two_color_ok && match;
        if (!match) detail << fmt("m(%d)=%d expect %d MISMATCH  ", b, r.value, 4 * b + 5);
    }
    ok = ok && two_color_ok;
    detail << fmt("m(b)=4b+5 for b in [1,10] [%s]  ", two_color_ok ? "ok" : "MISMATCH");
    NumberResult mp = compute_number(mono_problem(3, 1), budget);
    bool mp_ok = mp.status == NumberResult::Status::Found && mp.value == 27;
    ok = ok && mp_ok;
    detail << fmt("m'(1)=%d expect 27 [%s]", mp.value, mp_ok ? "ok" : "MISMATCH");
    out.pass = ok;
    out.note =
        "the claimed value m'(1)=17 fails verification: an explicit three-coloring "
        "of [1,17] avoids monochromatic solutions of x+y+1=z, and exhaustive "
        "search certifies 27 (see README caveats)";
    out.detail = detail.str();
}

void construction_chains(CriterionResult& out, unsigned long long) {
    bool ok = true;
    long long verified = 0;
    auto verify_link = [&](const Coloring& chi) {
        long long n = chi.size();
        if (2 * n + 1 <= 2000) {
            ok = ok && is_gallai_schur(star_extend(chi), Relation::eq(0));
            ++verified;
        }
        if (4 * n + 3 <= 2000) {
            ok = ok && is_gallai_schur(psi_extend(chi), Relation::eq(0));
            ++verified;
        }
        if (5 * n + 4 <= 2000) {
            ok = ok && is_gallai_schur(double_star_extend(chi), Relation::eq(0));
            ++verified;
        }
        if (9 * n + 8 <= 2000 && chi.num_colors >= 3) {
            ok = ok && is_gallai_schur(plus_extend(chi), Relation::eq(0, true));
            ++verified;
        }
    };
    for (const char* base : {"1221", "122131221"}) {
        Coloring chi = parse_coloring(base);
        while (2 * chi.size() + 1 <= 2000) {
            verify_link(chi);
            chi = star_extend(chi);
        }
        chi = parse_coloring(base);
        while (5 * chi.size() + 4 <= 2000) {
            verify_link(chi);
            chi = double_star_extend(chi);
        }
    }
    out.pass = ok;
    out.detail = fmt("%lld operator outputs of length <= 2000 verified solution-free "
                     "across chains from both bases [%s]",
                     verified, ok ? "ok" : "FAILURES");
}

void triangle_identity(CriterionResult& out, unsigned long long, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2);
    int passed = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        Coloring chi;
        chi.num_colors = 3;
        chi.values.resize(60);
        for (auto& v : chi.values) v = pick(rng);
        if (correspondence_check(chi)) ++passed;
    }
    out.pass = passed == trials;
    out.detail = fmt("exact triangle-vs-triple equality on %d/%d random 3-colorings "
                     "of [1,60] (seed %llu)",
                     passed, trials, static_cast<unsigned long long>(seed));
}

void interval_coloring_counts(CriterionResult& out, unsigned long long) {
    const long long n = 2200;
    Coloring rz = rz_coloring(n);
    TripleCensus c = census(rz, Relation::eq(0));
    double n2 = static_cast<double>(n) * n;
    double mono_ratio = static_cast<double>(c.mono) / n2 / (1.0 / 88.0);
    double rain_ratio = static_cast<double>(c.rainbow) / n2 / (21.0 / 968.0);
    double total_ratio =
        static_cast<double>(c.mono + c.rainbow) / n2 / (4.0 / 121.0);
    bool ratios_ok = mono_ratio > 0.99 && mono_ratio < 1.01 && rain_ratio > 0.99 &&
                     rain_ratio < 1.01 && total_ratio > 0.99 && total_ratio < 1.01;
    // 1/88 + 21/968 = 4/121 exactly
    bool identity_ok = Rational(1 * 968 + 21 * 88, 88 * 968) == Rational(4, 121);
    out.pass = ratios_ok && identity_ok;
    out.detail = fmt("n=%lld mono=%lld rainbow=%lld; mono/n^2 at %.4f of 1/88, "
                     "rainbow/n^2 at %.4f of 21/968, total at %.4f of 4/121 [%s]; "
                     "rational identity 1/88 + 21/968 = 4/121 [%s]",
                     n, c.mono, c.rainbow, mono_ratio, rain_ratio, total_ratio,
                     ratios_ok ? "ok" : "OUT OF RANGE",
                     identity_ok ? "ok" : "FALSE");
}

void density_oracle(CriterionResult& out, unsigned long long) {
    const long long n = 2000;
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
    out.pass = worst <= 5.0 / static_cast<double>(n);
    out.detail = fmt("25-point grid at n=%lld: worst |count/n^3 - poly| = %.3g, "
                     "bound 5/n = %.3g [%s]",
                     n, worst, 5.0 / static_cast<double>(n),
                     out.pass ? "ok" : "EXCEEDED");
}

void optimizer_constants(CriterionResult& out, unsigned long long) {
    const double kSqrt2 = std::sqrt(2.0);
    const double kSqrt3 = std::sqrt(3.0);
    const double kSqrt46 = std::sqrt(46.0);
    const double tol = 1e-8;
    std::ostringstream detail;
    bool ok = true;
    auto check = [&](const char* label, double got, double expect) {
        bool match = std::abs(got - expect) <= tol;
        ok = ok && match;
        detail << fmt("%s=%.10f expect %.10f [%s]  ", label, got, expect,
                      match ? "ok" : "OFF");
    };

    OptimizeResult gmin = optimize(DensityPoly::Gallai, Objective::Min);
    check("total-min", gmin.value, 3.0 / 196.0 - kSqrt2 / 147.0);
    OptimizeResult rmax = optimize(DensityPoly::Rainbow, Objective::Max);
    check("rainbow-max", rmax.value, (3.0 * kSqrt3 - 5.0) / 6.0);
    check("rainbow-max-a", rmax.a, 2.0 - kSqrt3);
    check("rainbow-max-b", rmax.b, (kSqrt3 - 1.0) / 2.0);
    OptimizeResult dmin = optimize(DensityPoly::Gallai, Objective::Min, 0.1);
    check("total-min-delta0.1", dmin.value,
          5501.0 / 294000.0 - 23.0 * kSqrt46 / 147000.0);

    Mono3Result m3 = mono3_min();
    check("mono3-min", m3.value, (89.0 - 36.0 * kSqrt2) / 63948.0);
    if (m3.regions.size() == 4) {
        check("mono3-r2", m3.regions[1].value, (9.0 - 4.0 * kSqrt2) / 4704.0);
        check("mono3-r3", m3.regions[2].value, 1.0 / 972.0);
        check("mono3-r4", m3.regions[3].value, 1.0 / 768.0);
    } else {
        ok = false;
    }
    out.pass = ok;
    out.detail = detail.str();
}

void cubic_threshold(CriterionResult& out, unsigned long long) {
    KThreshold k = solve_k_threshold(1.0 / 150.0);
    bool k_ok = std::abs(k.k - 0.1204034549) <= 1e-9;
    bool q_ok = std::abs(k.k_sq_over_4 - 0.003624247988) <= 1e-9;
    out.pass = k_ok && q_ok;
    out.detail = fmt("k(1/150)=%.12f [%s]  k^2/4=%.12f [%s]", k.k,
                     k_ok ? "ok" : "OFF", k.k_sq_over_4, q_ok ? "ok" : "OFF");
}

void structural_minimum(CriterionResult& out, unsigned long long) {
    int checked = 0;
    bool ok = true;
    for (long long lo : {1LL, 4LL}) {
        for (int s1 = 1; s1 <= 12; ++s1)
            for (int s2 = s1; s1 + s2 <= 12; ++s2)
                for (int s3 = s2; s1 + s2 + s3 <= 12; ++s3) {
                    ok = ok && structural_min_check(lo, {s1, s2, s3});
                    ++checked;
                }
    }
    out.pass = ok;
    out.detail = fmt("block colorings attain the monochromatic minimum for all %d "
                     "ascending three-class size vectors, n <= 12, lo in {1,4} [%s]",
                     checked, ok ? "ok" : "COUNTEREXAMPLE FOUND");
}

void table_replay(CriterionResult& out, unsigned long long) {
    bool ok = true;
    std::ostringstream detail;
    for (char t : {'a', 'b', 'c', 'd'}) {
        TableScenarios ts = table_scenarios(t, 5);
        ReplayReport rep = replay(ts.n, ts.b, ts.rows, 2);
        ok = ok && rep.all_expected_met;
        detail << fmt("table %c: %zu rows, expected contradictions %s, %d flagged (",
                      t, rep.rows.size(), rep.all_expected_met ? "all met" : "MISSED",
                      rep.flag_count);
        bool first = true;
        for (const RowVerdict& v : rep.rows)
            if (v.flagged) {
                detail << (first ? "" : ",") << v.row;
                first = false;
            }
        detail << ")  ";
    }
    out.pass = ok;
    out.note = "flagged rows close by propagation alone where the published "
               "verdict says open; reported without failing";
    out.detail = detail.str();
}

void strict_triple_pipeline(CriterionResult& out, unsigned long long,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2);
    const int trials = 50;
    int verified = 0;
    long long span = stanley_sequence(11).back();  // 30
    for (int t = 0; t < trials; ++t) {
        Coloring chi;
        chi.num_colors = 3;
        chi.values.resize(static_cast<size_t>(span));
        for (auto& v : chi.values) v = pick(rng);
        StrictTripleResult res = find_strict_triple_via_graph(chi, 11);
        if (!res.found || res.x >= res.y || res.x + res.y != res.z) continue;
        TripleClass cls = classify(chi, res.x, res.y, res.z);
        if (cls == res.cls && (cls == TripleClass::Monochromatic ||
                               cls == TripleClass::Rainbow))
            ++verified;
    }
    out.pass = verified == trials;
    out.detail = fmt("verified strict triples extracted from %d/%d random "
                     "3-colorings of [1,%lld] (seed %llu)",
                     verified, trials, span, static_cast<unsigned long long>(seed));
}

}  // namespace

std::string criterion_name(int id) {
    if (id < 1 || id > kCriterionCount)
        throw std::invalid_argument("criterion_name: id must be 1..13");
    return kNames[static_cast<size_t>(id - 1)];
}

int criterion_id(const std::string& token) {
    std::string t = token;
    if (!t.empty() && (t[0] == 'c' || t[0] == 'C')) t = t.substr(1);
    try {
        size_t used = 0;
        int id = std::stoi(t, &used);
        if (used == t.size() && id >= 1 && id <= kCriterionCount) return id;
    } catch (const std::exception&) {
    }
    for (int id = 1; id <= kCriterionCount; ++id)
        if (token == kNames[static_cast<size_t>(id - 1)]) return id;
    return 0;
}

CriterionResult run_criterion(int id, unsigned long long budget, std::uint64_t seed) {
    if (id < 1 || id > kCriterionCount)
        throw std::invalid_argument("run_criterion: id must be 1..13");
    CriterionResult out;
    out.id = id;
    out.name = criterion_name(id);
    auto t0 = std::chrono::steady_clock::now();
    switch (id) {
        case 1: schur_numbers(out, budget); break;
        case 2: gallai_schur_numbers(out, budget); break;
        case 3: offset_equation_numbers(out, budget); break;
        case 4: mono_offset_numbers(out, budget); break;
        case 5: construction_chains(out, budget); break;
        case 6: triangle_identity(out, budget, seed); break;
        case 7: interval_coloring_counts(out, budget); break;
        case 8: density_oracle(out, budget); break;
        case 9: optimizer_constants(out, budget); break;
        case 10: cubic_threshold(out, budget); break;
        case 11: structural_minimum(out, budget); break;
        case 12: table_replay(out, budget); break;
        case 13: strict_triple_pipeline(out, budget, seed); break;
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return out;
}

}  // namespace gs
