// gs: census, construction, propagation, search, density, and graph tooling
// for colorings of integer intervals, plus scripted reproductions.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gs/construct.hpp"
#include "gs/density.hpp"
#include "gs/graphs.hpp"
#include "gs/prop.hpp"
#include "gs/repro.hpp"
#include "gs/search.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string format = "text";
    std::uint64_t seed = 12345;
    unsigned threads = 0;  // 0 -> decided at startup from the hardware
    unsigned long long budget = gs::kDefaultNodeBudget;
};

// Collected by every handler: machine payload plus human lines.
struct Outcome {
    int exit_code = kExitOk;
    std::string command;
    ordered_json payload = ordered_json::object();
    std::vector<std::string> lines;

    void say(const std::string& s) { lines.push_back(s); }
};

std::string rel_name(const gs::Relation& rel) {
    std::string s = rel.kind == gs::RelationKind::Inequality
                        ? "x+y<z"
                        : (rel.b == 0 ? "x+y=z" : "x+y+b=z");
    if (rel.strict) s += " (x<y)";
    return s;
}

gs::Relation make_relation(const std::string& kind, long long b, bool strict) {
    if (kind == "lt") {
        if (b != 0) throw CLI::ValidationError("--b applies only to --rel eq");
        return gs::Relation::lt(strict);
    }
    return gs::Relation::eq(b, strict);
}

ordered_json census_json(const gs::Coloring& chi, const gs::Relation& rel) {
    gs::TripleCensus c = gs::census(chi, rel);
    ordered_json j;
    j["n"] = chi.size();
    j["lo"] = chi.lo;
    j["num_colors"] = chi.num_colors;
    j["relation"] = rel_name(rel);
    j["b"] = rel.b;
    j["mono"] = c.mono;
    j["rainbow"] = c.rainbow;
    j["total"] = c.total;
    j["solution_free"] = (c.mono == 0 && c.rainbow == 0);
    j["palindromic"] = gs::is_palindromic(chi);
    j["exact"] = gs::is_exact(chi);
    return j;
}

std::string class_name(gs::TripleClass c) {
    switch (c) {
        case gs::TripleClass::Monochromatic: return "mono";
        case gs::TripleClass::Rainbow: return "rainbow";
        default: return "neither";
    }
}

// ---- handlers ----------------------------------------------------------

Outcome run_census(const std::string& coloring, int lo, const std::string& rel_kind,
                   long long b, bool strict) {
    Outcome out;
    out.command = "census";
    gs::Coloring chi = gs::parse_coloring(coloring, lo);
    gs::Relation rel = make_relation(rel_kind, b, strict);
    out.payload = census_json(chi, rel);
    gs::TripleCensus c = gs::census(chi, rel);
    out.say("coloring of [" + std::to_string(chi.lo) + "," + std::to_string(chi.hi()) +
            "] with " + std::to_string(chi.num_colors) + " colors under " +
            rel_name(rel) + (rel.b ? " (b=" + std::to_string(rel.b) + ")" : ""));
    out.say("mono=" + std::to_string(c.mono) + " rainbow=" + std::to_string(c.rainbow) +
            " total=" + std::to_string(c.total));
    return out;
}

Outcome run_classify(const std::string& coloring, int lo, long long x, long long y,
                     long long z) {
    Outcome out;
    out.command = "classify";
    gs::Coloring chi = gs::parse_coloring(coloring, lo);
    gs::TripleClass c = gs::classify(chi, x, y, z);
    out.payload["x"] = x;
    out.payload["y"] = y;
    out.payload["z"] = z;
    out.payload["colors"] = {chi.at(x), chi.at(y), chi.at(z)};
    out.payload["class"] = class_name(c);
    out.say("(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
            ") -> " + class_name(c));
    return out;
}

Outcome run_construct(const std::string& op, const std::string& base, int r,
                      long long b, long long n, bool force) {
    Outcome out;
    out.command = "construct";
    out.payload["op"] = op;
    if (op == "stanley") {
        if (n < 1) throw CLI::ValidationError("--n is required for stanley");
        std::vector<long long> seq = gs::stanley_sequence(static_cast<int>(n));
        out.payload["terms"] = seq;
        std::ostringstream line;
        for (size_t i = 0; i < seq.size(); ++i) line << (i ? " " : "") << seq[i];
        out.say(line.str());
        return out;
    }

    gs::Coloring result;
    gs::ClaimedProperty prop = gs::ClaimedProperty::GallaiSchur;
    if (op == "family") {
        if (r < 2) throw CLI::ValidationError("--r >= 2 is required for family");
        result = gs::palindromic_family(r);
        prop = gs::ClaimedProperty::PalindromicGallaiSchur;
    } else if (op == "offset-witness") {
        if (b < 1) throw CLI::ValidationError("--b >= 1 is required for offset-witness");
        result = gs::nb_lower_coloring(b);
        prop = gs::ClaimedProperty::AvoidsMonoRainbowForB;
    } else if (op == "interval-blocks") {
        if (n < 1) throw CLI::ValidationError("--n is required for interval-blocks");
        result = gs::rz_coloring(n);
        out.payload["length"] = result.size();
        out.payload["coloring"] = gs::format_coloring(result);
        out.say(gs::format_coloring(result));
        return out;  // a counting example, not a solution-free claim
    } else {
        if (base.empty()) throw CLI::ValidationError("--base is required for " + op);
        gs::Coloring chi = gs::parse_coloring(base);
        if (op == "star") result = gs::star_extend(chi, force);
        else if (op == "psi") result = gs::psi_extend(chi, force);
        else if (op == "double-star") result = gs::double_star_extend(chi, force);
        else if (op == "plus") {
            result = gs::plus_extend(chi, force);
            prop = gs::ClaimedProperty::StrictGallaiSchur;
        } else {
            throw CLI::ValidationError("unknown --op " + op);
        }
    }

    gs::ConstructionReport rep = gs::make_report(result, prop, b);
    out.payload["length"] = result.size();
    out.payload["num_colors"] = result.num_colors;
    out.payload["palindromic"] = gs::is_palindromic(result);
    out.payload["exact"] = gs::is_exact(result);
    out.payload["property"] = gs::property_name(rep.claimed_property);
    out.payload["checked"] = rep.checked;
    out.payload["verified"] = rep.verified;
    out.payload["coloring"] = gs::format_coloring(result);
    out.say("length " + std::to_string(result.size()) + ", " +
            std::to_string(result.num_colors) + " colors, claim '" +
            gs::property_name(rep.claimed_property) + "' " +
            (rep.checked ? (rep.verified ? "[verified]" : "[REFUTED]")
                         : "[unchecked: above census cap]"));
    out.say(gs::format_coloring(result));
    if (rep.checked && !rep.verified) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_prop_replay(char table, int k, int depth) {
    Outcome out;
    out.command = "prop replay";
    gs::TableScenarios ts = gs::table_scenarios(table, k);
    gs::ReplayReport rep = gs::replay(ts.n, ts.b, ts.rows, depth);
    out.payload["table"] = std::string(1, table);
    out.payload["k"] = k;
    out.payload["b"] = ts.b;
    out.payload["n"] = ts.n;
    out.payload["max_split_depth"] = depth;
    ordered_json rows = ordered_json::array();
    for (const gs::RowVerdict& v : rep.rows) {
        ordered_json r;
        r["row"] = v.row;
        r["expected_contradiction"] = v.expected_contradiction;
        r["contradiction"] = v.contradiction;
        r["depth"] = v.depth;
        r["flagged"] = v.flagged;
        rows.push_back(std::move(r));
    }
    out.payload["rows"] = std::move(rows);
    out.payload["all_expected_met"] = rep.all_expected_met;
    out.payload["flag_count"] = rep.flag_count;
    out.say("table " + std::string(1, table) + " (k=" + std::to_string(k) +
            ", b=" + std::to_string(ts.b) + ", n=" + std::to_string(ts.n) + "): " +
            std::to_string(rep.rows.size()) + " rows");
    for (const gs::RowVerdict& v : rep.rows)
        out.say("  row " + std::to_string(v.row) + ": expected " +
                (v.expected_contradiction ? "contradiction" : "open      ") + ", got " +
                (v.contradiction ? "contradiction@" + std::to_string(v.depth)
                                 : "open") +
                (v.flagged ? "  [flagged]" : ""));
    out.say(std::string("all expected contradictions met: ") +
            (rep.all_expected_met ? "yes" : "NO") +
            "; flagged rows: " + std::to_string(rep.flag_count));
    if (!rep.all_expected_met) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_prop_prove(int n, long long b, unsigned long long budget) {
    Outcome out;
    out.command = "prop prove";
    gs::ProveResult res = gs::prove_upper(n, b, budget);
    out.payload["n"] = n;
    out.payload["b"] = b;
    const char* status = res.status == gs::ProveResult::Status::Proved
                             ? "proved"
                             : res.status == gs::ProveResult::Status::Counterexample
                                   ? "counterexample"
                                   : "unknown";
    out.payload["status"] = status;
    out.payload["nodes"] = res.nodes;
    if (res.counterexample)
        out.payload["counterexample"] = gs::format_coloring(*res.counterexample);
    out.say("every exact 3-coloring of [1," + std::to_string(n) +
            "] has a mono or rainbow solution of x+y+" + std::to_string(b) +
            "=z: " + status + " (" + std::to_string(res.nodes) + " nodes)");
    if (res.counterexample) out.say("counterexample: " + gs::format_coloring(*res.counterexample));
    if (res.status != gs::ProveResult::Status::Proved) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_prop_propagate(int n, long long b, const std::vector<std::string>& sets) {
    Outcome out;
    out.command = "prop propagate";
    gs::DomainState st = gs::make_state(n, b);
    ordered_json seeds = ordered_json::array();
    for (const std::string& s : sets) {
        auto eq_pos = s.find('=');
        if (eq_pos == std::string::npos || eq_pos == 0 || eq_pos + 2 != s.size())
            throw CLI::ValidationError("--set expects POS=A|B|C, got '" + s + "'");
        int pos = std::stoi(s.substr(0, eq_pos));
        char letter = static_cast<char>(std::toupper(s[eq_pos + 1]));
        if (letter < 'A' || letter > 'C')
            throw CLI::ValidationError("--set color must be A, B, or C");
        seeds.push_back({{"pos", pos}, {"color", std::string(1, letter)}});
        if (!st.contradiction) gs::assume(st, pos, letter - 'A');
    }
    out.payload["n"] = n;
    out.payload["b"] = b;
    out.payload["seeds"] = std::move(seeds);
    out.payload["contradiction"] = st.contradiction;
    ordered_json fixed = ordered_json::array();
    int num_fixed = 0;
    if (!st.contradiction) {
        for (int i = 1; i <= n; ++i)
            if (int c = st.fixed_color(i); c >= 0) {
                fixed.push_back({{"pos", i}, {"color", std::string(1, gs::class_letter(c))}});
                ++num_fixed;
            }
    }
    out.payload["fixed"] = std::move(fixed);
    out.payload["num_fixed"] = num_fixed;
    if (st.contradiction) {
        out.say("contradiction by propagation alone");
    } else {
        out.say(std::to_string(num_fixed) + " integers forced:");
        for (int i = 1; i <= n; ++i)
            if (int c = st.fixed_color(i); c >= 0)
                out.say("  " + std::to_string(i) + " -> " +
                        std::string(1, gs::class_letter(c)));
    }
    return out;
}

gs::SearchProblem build_problem(int colors, long long b, const std::string& mode,
                                bool strict, std::optional<bool> exact) {
    gs::SearchProblem p;
    p.r = colors;
    p.rel = gs::Relation::eq(b, strict);
    if (mode == "mono") {
        p.mode = gs::SearchProblem::Mode::MonoOnly;
        p.exact_required = exact.value_or(false);
    } else if (mode == "gallai") {
        p.mode = gs::SearchProblem::Mode::MonoPlusRainbow;
        p.exact_required = exact.value_or(true);
    } else {
        throw CLI::ValidationError("--mode must be mono or gallai");
    }
    return p;
}

Outcome run_search_number(const gs::SearchProblem& p, unsigned long long budget,
                          int max_n) {
    Outcome out;
    out.command = "search number";
    gs::NumberResult res = gs::compute_number(p, budget, max_n);
    out.payload["problem"] = p.describe();
    out.payload["status"] =
        res.status == gs::NumberResult::Status::Found ? "found" : "unknown";
    out.payload["value"] = res.value;
    out.payload["first_witness_n"] = res.first_witness_n;
    out.payload["last_completed_n"] = res.last_completed_n;
    out.payload["nodes"] = res.nodes_total;
    if (res.status == gs::NumberResult::Status::Found) {
        out.say(p.describe() + ": least forcing n = " + std::to_string(res.value) +
                " (" + std::to_string(res.nodes_total) + " nodes)");
    } else {
        out.say(p.describe() + ": unknown under budget (completed n=" +
                std::to_string(res.last_completed_n) + ")");
        out.exit_code = kExitMathFail;
    }
    return out;
}

Outcome run_search_extremal(const gs::SearchProblem& p, int n,
                            unsigned long long budget) {
    Outcome out;
    out.command = "search extremal";
    gs::Certificate cert = gs::extremal(p, n, budget);
    out.payload["problem"] = p.describe();
    out.payload["n"] = n;
    const char* kind = cert.kind == gs::Certificate::Kind::Witness
                           ? "witness"
                           : cert.kind == gs::Certificate::Kind::Exhaustion
                                 ? "exhaustion"
                                 : "unknown";
    out.payload["kind"] = kind;
    if (cert.witness) out.payload["witness"] = gs::format_coloring(*cert.witness);
    out.payload["nodes"] = cert.nodes_explored;
    out.payload["config_hash"] = cert.config_hash;
    out.say(p.describe() + " on [1," + std::to_string(n) + "]: " + kind);
    if (cert.witness) out.say("witness: " + gs::format_coloring(*cert.witness));
    if (cert.kind == gs::Certificate::Kind::Unknown) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_search_chain(int colors) {
    Outcome out;
    out.command = "search chain";
    gs::BoundChainReport rep = gs::verify_bound_chain(colors);
    out.payload["colors"] = rep.r;
    out.payload["lower"] = rep.lower;
    out.payload["witness_length"] = rep.witness_length;
    out.payload["witness_verified"] = rep.witness_verified;
    out.payload["upper"] = rep.upper;
    out.payload["stanley_terms"] = rep.stanley_terms;
    out.payload["f_value"] = rep.f_value;
    out.payload["growth_cap"] = rep.growth_cap;
    out.payload["lower_le_upper"] = rep.lower_le_upper;
    out.say("strict avoidance threshold, " + std::to_string(rep.r) + " colors: " +
            std::to_string(rep.lower) + " <= value <= " + std::to_string(rep.upper));
    out.say("witness length " + std::to_string(rep.witness_length) +
            (rep.witness_verified ? " [verified]" : " [NOT verified]") +
            "; cap from " + std::to_string(rep.stanley_terms) + " sequence terms");
    if (!rep.witness_verified || !rep.lower_le_upper) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_density_eval(double a, double b) {
    Outcome out;
    out.command = "density eval";
    gs::IntervalSplit s{a, b, std::nullopt};
    s.validate();
    out.payload["a"] = a;
    out.payload["b"] = b;
    out.payload["mono"] = gs::mono_poly(a, b);
    out.payload["rainbow"] = gs::rainbow_poly(a, b);
    out.payload["total"] = gs::g_poly(a, b);
    std::ostringstream line;
    line << "leading densities at (a,b)=(" << a << "," << b
         << "): mono=" << gs::mono_poly(a, b) << " rainbow=" << gs::rainbow_poly(a, b)
         << " total=" << gs::g_poly(a, b);
    out.say(line.str());
    return out;
}

Outcome run_density_optimize(const std::string& objective, double delta, double step) {
    Outcome out;
    out.command = "density optimize";
    out.payload["objective"] = objective;
    std::ostringstream line;
    if (objective == "mono") {
        gs::Mono3Result res = gs::mono3_min();
        out.payload["value"] = res.value;
        ordered_json regions = ordered_json::array();
        for (const gs::RegionMinimum& r : res.regions)
            regions.push_back({{"region", r.region},
                               {"alpha", r.alpha},
                               {"beta", r.beta},
                               {"value", r.value}});
        out.payload["regions"] = std::move(regions);
        out.payload["two_color_reference"] = res.two_color_reference;
        line << "three-class mono minimum " << res.value
             << " (two-class reference " << res.two_color_reference << ")";
        out.say(line.str());
        for (const gs::RegionMinimum& r : res.regions) {
            std::ostringstream rl;
            rl << "  region " << r.region << ": min " << r.value << " at (" << r.alpha
               << "," << r.beta << ")";
            out.say(rl.str());
        }
        return out;
    }
    gs::DensityPoly which;
    gs::Objective sense;
    if (objective == "gm") {
        which = gs::DensityPoly::Gallai;
        sense = gs::Objective::Min;
    } else if (objective == "rainbow-max") {
        which = gs::DensityPoly::Rainbow;
        sense = gs::Objective::Max;
    } else {
        throw CLI::ValidationError("--objective must be mono, gm, or rainbow-max");
    }
    gs::OptimizeResult res = gs::optimize(which, sense, delta, step);
    out.payload["delta"] = delta;
    out.payload["step"] = step;
    out.payload["value"] = res.value;
    out.payload["a"] = res.a;
    out.payload["b"] = res.b;
    ordered_json optima = ordered_json::array();
    for (auto [oa, ob] : res.optima) optima.push_back({oa, ob});
    out.payload["optima"] = std::move(optima);
    out.payload["evaluations"] = res.evaluations;
    line.precision(12);
    line << objective << (sense == gs::Objective::Min ? " minimum " : " maximum ")
         << res.value << " at (a,b)=(" << res.a << "," << res.b << "); "
         << res.optima.size() << " optimal point(s)";
    out.say(line.str());
    return out;
}

Outcome run_density_oracle(long long n, int grid, bool emit_plot) {
    Outcome out;
    out.command = "density oracle";
    double cube = static_cast<double>(n) * n * n;
    double worst = 0.0;
    ordered_json points = ordered_json::array();
    std::vector<std::string> dat_lines;
    for (int i = 1; i <= grid; ++i)
        for (int j = 1; j <= grid; ++j) {
            double a = i / 10.0;
            double b = j / 10.0;
            if (a + b > 1.0) continue;
            gs::IntervalSplit s{a, b, std::nullopt};
            double scaled = static_cast<double>(gs::exact_count(
                                n, s, gs::Relation::lt(), gs::CountKind::Both)) /
                            cube;
            double poly = gs::g_poly(a, b);
            double err = std::abs(scaled - poly);
            worst = std::max(worst, err);
            points.push_back({{"a", a},
                              {"b", b},
                              {"scaled_count", scaled},
                              {"poly", poly},
                              {"abs_err", err}});
            std::ostringstream dl;
            dl.precision(12);
            dl << a << " " << b << " " << scaled << " " << poly << " " << err;
            dat_lines.push_back(dl.str());
        }
    double bound = 5.0 / static_cast<double>(n);
    bool pass = worst <= bound;
    out.payload["n"] = n;
    out.payload["grid"] = grid;
    out.payload["points"] = std::move(points);
    out.payload["worst_abs_err"] = worst;
    out.payload["bound"] = bound;
    out.payload["pass"] = pass;
    std::ostringstream line;
    line << "worst |count/n^3 - poly| = " << worst << " vs bound 5/n = " << bound
         << (pass ? " [ok]" : " [EXCEEDED]");
    out.say(line.str());
    if (emit_plot) {
        const char* env = std::getenv("GS_OUTPUT_DIR");
        std::string dir = env && *env ? env : ".";
        std::string dat = dir + "/oracle_grid.dat";
        std::string gp = dir + "/oracle_plot.gp";
        std::ofstream df(dat);
        df << "# a b scaled_count poly abs_err\n";
        for (const std::string& l : dat_lines) df << l << "\n";
        std::ofstream gf(gp);
        gf << "set terminal pngcairo size 900,700\n"
           << "set output 'oracle_grid.png'\n"
           << "set xlabel 'a'\nset ylabel 'b'\nset zlabel 'density'\n"
           << "splot 'oracle_grid.dat' using 1:2:3 with points title 'scaled count', \\\n"
           << "      'oracle_grid.dat' using 1:2:4 with points title 'closed form'\n";
        out.payload["plot_data"] = dat;
        out.payload["plot_script"] = gp;
        out.say("wrote " + dat + " and " + gp);
    }
    if (!pass) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_density_count(long long s, long long t) {
    Outcome out;
    out.command = "density count";
    out.payload["s"] = s;
    out.payload["t"] = t;
    out.payload["count"] = gs::count_I(s, t);
    out.payload["asymptotic"] = gs::asymptotic_I(static_cast<double>(s),
                                                 static_cast<double>(t));
    std::ostringstream line;
    line << "solutions of x+y<z in [" << s << "," << t << "]: " << gs::count_I(s, t)
         << " (leading term " << out.payload["asymptotic"].get<double>() << ")";
    out.say(line.str());
    return out;
}

double parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw CLI::ValidationError("zero denominator in " + text);
    return num / den;
}

Outcome run_density_threshold(const std::string& c_text) {
    Outcome out;
    out.command = "density threshold";
    double c = parse_fraction(c_text);
    gs::KThreshold k = gs::solve_k_threshold(c);
    out.payload["c"] = c;
    out.payload["k"] = k.k;
    out.payload["k_sq_over_4"] = k.k_sq_over_4;
    std::ostringstream line;
    line.precision(12);
    line << "k(" << c_text << ") = " << k.k << ", k^2/4 = " << k.k_sq_over_4;
    out.say(line.str());
    return out;
}

Outcome run_density_structural(long long lo, const std::string& sizes_text) {
    Outcome out;
    out.command = "density structural";
    std::vector<int> sizes;
    std::stringstream ss(sizes_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    gs::Coloring block = gs::block_coloring(lo, sizes);
    bool minimum = gs::structural_min_check(lo, sizes);
    out.payload["lo"] = lo;
    out.payload["sizes"] = sizes;
    out.payload["block_coloring"] = gs::format_coloring(block);
    out.payload["block_count"] = gs::mono_lt_count(block);
    out.payload["is_minimum"] = minimum;
    out.say("block coloring " + gs::format_coloring(block) + " attains " +
            std::to_string(gs::mono_lt_count(block)) + " mono solutions: " +
            (minimum ? "minimal over all colorings" : "NOT minimal"));
    if (!minimum) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_graph_census(const std::string& coloring, int lo) {
    Outcome out;
    out.command = "graph census";
    gs::Coloring chi = gs::parse_coloring(coloring, lo);
    gs::EdgeColoring ec = gs::difference_coloring(chi);
    gs::TriangleCensus direct = gs::triangle_census(ec);
    gs::TriangleCensus identity = gs::triangle_census_by_identity(ec);
    bool agree = direct == identity;
    out.payload["n_integers"] = chi.size();
    out.payload["vertices"] = ec.vertex_count;
    out.payload["mono"] = direct.mono;
    out.payload["rainbow"] = direct.rainbow;
    out.payload["total"] = direct.total;
    out.payload["algorithms_agree"] = agree;
    out.say("difference coloring on " + std::to_string(ec.vertex_count) +
            " vertices: mono=" + std::to_string(direct.mono) +
            " rainbow=" + std::to_string(direct.rainbow) +
            " total=" + std::to_string(direct.total) +
            (agree ? " (both algorithms agree)" : " (ALGORITHM DISAGREEMENT)"));
    if (!agree) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_graph_correspondence(const std::string& coloring, int lo) {
    Outcome out;
    out.command = "graph check-correspondence";
    gs::Coloring chi = gs::parse_coloring(coloring, lo);
    bool holds = gs::correspondence_check(chi);
    out.payload["n"] = chi.size();
    out.payload["holds"] = holds;
    out.say(std::string("triangle count vs weighted triple count: ") +
            (holds ? "exact match" : "MISMATCH"));
    if (!holds) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_graph_baseline(int n, int colors, int trials, std::uint64_t seed) {
    Outcome out;
    out.command = "graph baseline";
    gs::BaselineStats st = gs::random_baseline(n, colors, trials, seed);
    out.payload["n"] = st.n;
    out.payload["colors"] = st.r;
    out.payload["trials"] = st.trials;
    out.payload["seed"] = st.seed;
    out.payload["mono_mean"] = st.mono_mean;
    out.payload["mono_sd"] = st.mono_sd;
    out.payload["rainbow_mean"] = st.rainbow_mean;
    out.payload["rainbow_sd"] = st.rainbow_sd;
    std::ostringstream line;
    line << "random baseline on K_" << n << " with " << colors << " colors, "
         << trials << " trials: mono " << st.mono_mean << " +- " << st.mono_sd
         << ", rainbow " << st.rainbow_mean << " +- " << st.rainbow_sd;
    out.say(line.str());
    return out;
}

Outcome run_graph_pipeline(const std::string& coloring, int terms,
                           std::uint64_t seed) {
    Outcome out;
    out.command = "graph pipeline";
    gs::Coloring chi;
    std::string source;
    long long span = gs::stanley_sequence(terms).back();
    if (!coloring.empty()) {
        chi = gs::parse_coloring(coloring);
        source = "given";
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, 2);
        chi.num_colors = 3;
        chi.values.resize(static_cast<size_t>(span));
        for (auto& v : chi.values) v = pick(rng);
        source = "random";
    }
    gs::StrictTripleResult res = gs::find_strict_triple_via_graph(chi, terms);
    bool verified = false;
    if (res.found) {
        gs::TripleClass cls = gs::classify(chi, res.x, res.y, res.z);
        verified = res.x < res.y && res.x + res.y == res.z && cls == res.cls &&
                   (cls == gs::TripleClass::Monochromatic ||
                    cls == gs::TripleClass::Rainbow);
    }
    out.payload["terms"] = terms;
    out.payload["span"] = span;
    out.payload["coloring_source"] = source;
    out.payload["found"] = res.found;
    if (res.found) {
        out.payload["x"] = res.x;
        out.payload["y"] = res.y;
        out.payload["z"] = res.z;
        out.payload["class"] = class_name(res.cls);
        out.payload["verified"] = verified;
        out.say("strict triple (" + std::to_string(res.x) + "," +
                std::to_string(res.y) + "," + std::to_string(res.z) + ") is " +
                class_name(res.cls) + (verified ? " [verified]" : " [BAD]"));
    } else {
        out.say("no monochromatic or rainbow triangle among the labeled vertices");
    }
    if (!res.found || !verified) out.exit_code = kExitMathFail;
    return out;
}

Outcome run_graph_bound(int k, int l, int colors, long long s, long long n) {
    Outcome out;
    out.command = "graph bound";
    gs::Rational r = gs::triangle_count_lower_bound(k, l, colors, s, n);
    out.payload["k"] = k;
    out.payload["l"] = l;
    out.payload["colors"] = colors;
    out.payload["s"] = s;
    out.payload["n"] = n;
    out.payload["threshold"] = gs::g33(colors);
    out.payload["numerator"] = r.num;
    out.payload["denominator"] = r.den;
    out.payload["value"] = r.value();
    std::ostringstream line;
    line << "guaranteed mono-or-rainbow triangles: " << r.num << "/" << r.den
         << " = " << r.value();
    out.say(line.str());
    return out;
}

Outcome run_repro(const std::string& id_token, bool list, unsigned long long budget,
                  std::uint64_t seed) {
    Outcome out;
    out.command = "repro";
    if (list) {
        ordered_json items = ordered_json::array();
        for (int id = 1; id <= gs::kCriterionCount; ++id) {
            items.push_back({{"id", "c" + std::to_string(id)},
                             {"name", gs::criterion_name(id)}});
            out.say("c" + std::to_string(id) + "  " + gs::criterion_name(id));
        }
        out.payload["criteria"] = std::move(items);
        return out;
    }
    int id = gs::criterion_id(id_token);
    if (id == 0) {
        std::cerr << "error: unknown reproduction id '" << id_token
                  << "' (see repro --list)\n";
        out.exit_code = kExitUsage;
        return out;
    }
    gs::CriterionResult res = gs::run_criterion(id, budget, seed);
    out.payload["id"] = "c" + std::to_string(res.id);
    out.payload["name"] = res.name;
    out.payload["pass"] = res.pass;
    out.payload["detail"] = res.detail;
    if (!res.note.empty()) out.payload["note"] = res.note;
    out.say(std::string(res.pass ? "[PASS] " : "[FAIL] ") + "c" +
            std::to_string(res.id) + " " + res.name);
    out.say("  " + res.detail);
    if (!res.note.empty()) out.say("  note: " + res.note);
    if (!res.pass) out.exit_code = kExitMathFail;
    return out;
}

void emit(const Outcome& out, const RunConfig& cfg, double timing_ms) {
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = out.command;
        doc["seed"] = cfg.seed;
        doc["threads"] = cfg.threads;
        doc["result"] = out.payload;
        doc["timing_ms"] = timing_ms;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const std::string& line : out.lines) std::cout << line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());

    CLI::App app{"census, construction, propagation, search, density, and graph "
                 "tooling for colorings of integer intervals"};
    app.require_subcommand(1);
    app.add_option("--format,-f", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized subcommands")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads,
                   "worker threads (recorded; current algorithms are sequential)")
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "search node budget")
        ->capture_default_str();

    // census
    std::string coloring, rel_kind = "eq";
    int lo = 1;
    long long b = 0;
    bool strict = false;
    auto* census_cmd = app.add_subcommand("census", "count solution triples by class");
    census_cmd->add_option("--coloring", coloring, "digits/letters, or runs like 1^4 2^4")
        ->required();
    census_cmd->add_option("--lo", lo, "first integer of the interval")->capture_default_str();
    census_cmd->add_option("--rel", rel_kind, "relation: eq (x+y+b=z) or lt (x+y<z)")
        ->check(CLI::IsMember({"eq", "lt"}))
        ->capture_default_str();
    census_cmd->add_option("--b", b, "offset for --rel eq")->capture_default_str();
    census_cmd->add_flag("--strict", strict, "require x < y");

    // classify
    long long cx = 0, cy = 0, cz = 0;
    auto* classify_cmd = app.add_subcommand("classify", "class of one triple");
    classify_cmd->add_option("--coloring", coloring)->required();
    classify_cmd->add_option("--lo", lo)->capture_default_str();
    classify_cmd->add_option("--x", cx)->required();
    classify_cmd->add_option("--y", cy)->required();
    classify_cmd->add_option("--z", cz)->required();

    // construct
    std::string op, base;
    int fam_r = 0;
    long long cn = 0;
    bool force = false;
    auto* construct_cmd =
        app.add_subcommand("construct", "build and verify named colorings");
    construct_cmd->add_option("--op", op, "star|psi|double-star|plus|family|offset-witness|interval-blocks|stanley")
        ->required()
        ->check(CLI::IsMember({"star", "psi", "double-star", "plus", "family",
                               "offset-witness", "interval-blocks", "stanley"}));
    construct_cmd->add_option("--base", base, "input coloring for the operators");
    construct_cmd->add_option("--r", fam_r, "colors for --op family");
    construct_cmd->add_option("--b", b, "offset for --op offset-witness");
    construct_cmd->add_option("--n", cn, "length for interval-blocks, terms for stanley");
    construct_cmd->add_flag("--force", force, "skip operator preconditions");

    // prop
    auto* prop_cmd = app.add_subcommand("prop", "forced-color propagation");
    prop_cmd->require_subcommand(1);
    std::string table = "a";
    int k = 5, depth = 2, pn = 0;
    auto* replay_cmd = prop_cmd->add_subcommand("replay", "replay a forced-color table");
    replay_cmd->add_option("--table", table)->check(CLI::IsMember({"a", "b", "c", "d"}))
        ->capture_default_str();
    replay_cmd->add_option("--k", k, "table parameter (>= 5)")->capture_default_str();
    replay_cmd->add_option("--depth", depth, "max case-split depth")->capture_default_str();
    auto* prove_cmd = prop_cmd->add_subcommand("prove", "exhaustive upper-bound proof");
    prove_cmd->add_option("--n", pn)->required();
    prove_cmd->add_option("--b", b)->required();
    std::vector<std::string> sets;
    auto* propagate_cmd = prop_cmd->add_subcommand("propagate", "seed and propagate");
    propagate_cmd->add_option("--n", pn)->required();
    propagate_cmd->add_option("--b", b)->required();
    propagate_cmd->add_option("--set", sets, "assignment POS=A|B|C (repeatable)");

    // search
    auto* search_cmd = app.add_subcommand("search", "backtracking avoidance search");
    search_cmd->require_subcommand(1);
    int colors = 3, sn = 0, max_n = 200;
    std::string mode = "gallai";
    std::optional<bool> exact_opt;
    bool exact_flag = false, no_exact_flag = false;
    auto add_problem_opts = [&](CLI::App* c) {
        c->add_option("--colors", colors, "number of colors")->required();
        c->add_option("--b", b, "equation offset")->capture_default_str();
        c->add_option("--mode", mode, "mono (mono only) or gallai (mono or rainbow)")
            ->check(CLI::IsMember({"mono", "gallai"}))
            ->capture_default_str();
        c->add_flag("--strict", strict, "require x < y");
        c->add_flag("--exact", exact_flag, "require every color used");
        c->add_flag("--no-exact", no_exact_flag, "allow unused colors");
    };
    auto* number_cmd = search_cmd->add_subcommand("number", "least forcing interval length");
    add_problem_opts(number_cmd);
    number_cmd->add_option("--max-n", max_n)->capture_default_str();
    auto* extremal_cmd = search_cmd->add_subcommand("extremal", "witness or exhaustion at one n");
    add_problem_opts(extremal_cmd);
    extremal_cmd->add_option("--n", sn)->required();
    auto* chain_cmd = search_cmd->add_subcommand("chain", "certified bound chain");
    chain_cmd->add_option("--colors", colors)->required();

    // density
    auto* density_cmd = app.add_subcommand("density", "interval-family densities");
    density_cmd->require_subcommand(1);
    double da = 0, db = 0, delta = 0, step = 1e-3;
    std::string objective, c_text, sizes_text;
    long long dn = 2000, ds = 1, dt = 0, dlo = 1;
    int grid = 5;
    bool emit_plot = false;
    auto* eval_cmd = density_cmd->add_subcommand("eval", "closed forms at one point");
    eval_cmd->add_option("--a", da)->required();
    eval_cmd->add_option("--b", db)->required();
    auto* opt_cmd = density_cmd->add_subcommand("optimize", "extremize a closed form");
    opt_cmd->add_option("--objective", objective, "mono|gm|rainbow-max")->required();
    opt_cmd->add_option("--delta", delta, "minimum class measure")->capture_default_str();
    opt_cmd->add_option("--step", step, "initial grid spacing")->capture_default_str();
    auto* oracle_cmd = density_cmd->add_subcommand("oracle", "exact counts vs closed forms");
    oracle_cmd->add_option("--n", dn)->capture_default_str();
    oracle_cmd->add_option("--grid", grid, "grid points per axis at 0.1 spacing")
        ->capture_default_str();
    oracle_cmd->add_flag("--emit-plot", emit_plot, "write data + gnuplot script");
    auto* count_cmd = density_cmd->add_subcommand("count", "solutions of x+y<z in [s,t]");
    count_cmd->add_option("--s", ds)->capture_default_str();
    count_cmd->add_option("--t", dt)->required();
    auto* threshold_cmd = density_cmd->add_subcommand("threshold", "root of k^2/2 - k^3/3 = c");
    threshold_cmd->add_option("--c", c_text, "target value, e.g. 1/150")->required();
    auto* structural_cmd =
        density_cmd->add_subcommand("structural", "block colorings minimize mono count");
    structural_cmd->add_option("--lo", dlo)->capture_default_str();
    structural_cmd->add_option("--sizes", sizes_text, "ascending class sizes, e.g. 2,3,5")
        ->required();

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "edge-colored complete graphs");
    graph_cmd->require_subcommand(1);
    int gn = 0, terms = 11, trials = 100, bk = 3, bl = 3;
    long long bs = 1, bn = 0;
    auto* gcensus_cmd = graph_cmd->add_subcommand("census", "triangles of the difference coloring");
    gcensus_cmd->add_option("--coloring", coloring)->required();
    gcensus_cmd->add_option("--lo", lo)->capture_default_str();
    auto* corr_cmd = graph_cmd->add_subcommand("check-correspondence",
                                               "triangle count vs weighted triple count");
    corr_cmd->add_option("--coloring", coloring)->required();
    corr_cmd->add_option("--lo", lo)->capture_default_str();
    auto* baseline_cmd = graph_cmd->add_subcommand("baseline", "random edge-coloring statistics");
    baseline_cmd->add_option("--n", gn)->required();
    baseline_cmd->add_option("--colors", colors)->required();
    baseline_cmd->add_option("--trials", trials)->capture_default_str();
    auto* pipeline_cmd = graph_cmd->add_subcommand("pipeline", "strict triple via graph labeling");
    pipeline_cmd->add_option("--coloring", coloring, "3-coloring covering the labels (random if omitted)");
    pipeline_cmd->add_option("--terms", terms)->capture_default_str();
    auto* bound_cmd = graph_cmd->add_subcommand("bound", "guaranteed triangle count");
    bound_cmd->add_option("--k", bk)->capture_default_str();
    bound_cmd->add_option("--l", bl)->capture_default_str();
    bound_cmd->add_option("--colors", colors)->required();
    bound_cmd->add_option("--s", bs)->capture_default_str();
    bound_cmd->add_option("--n", bn)->required();

    // repro
    std::string repro_id;
    bool repro_list = false;
    auto* repro_cmd = app.add_subcommand("repro", "scripted reproductions (c1..c13)");
    repro_cmd->add_option("id", repro_id, "criterion id or name, e.g. c3 or table-replay");
    repro_cmd->add_flag("--list", repro_list, "list all reproduction ids");

    // let --format/--seed/--threads/--budget appear after any subcommand
    std::function<void(CLI::App*)> allow_globals = [&](CLI::App* node) {
        node->fallthrough();
        for (CLI::App* sub : node->get_subcommands([](CLI::App*) { return true; }))
            allow_globals(sub);
    };
    allow_globals(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (exact_flag) exact_opt = true;
        if (no_exact_flag) exact_opt = false;
        if (*census_cmd) out = run_census(coloring, lo, rel_kind, b, strict);
        else if (*classify_cmd) out = run_classify(coloring, lo, cx, cy, cz);
        else if (*construct_cmd) out = run_construct(op, base, fam_r, b, cn, force);
        else if (*replay_cmd) out = run_prop_replay(table[0], k, depth);
        else if (*prove_cmd) out = run_prop_prove(pn, b, cfg.budget);
        else if (*propagate_cmd) out = run_prop_propagate(pn, b, sets);
        else if (*number_cmd)
            out = run_search_number(build_problem(colors, b, mode, strict, exact_opt),
                                    cfg.budget, max_n);
        else if (*extremal_cmd)
            out = run_search_extremal(build_problem(colors, b, mode, strict, exact_opt),
                                      sn, cfg.budget);
        else if (*chain_cmd) out = run_search_chain(colors);
        else if (*eval_cmd) out = run_density_eval(da, db);
        else if (*opt_cmd) out = run_density_optimize(objective, delta, step);
        else if (*oracle_cmd) out = run_density_oracle(dn, grid, emit_plot);
        else if (*count_cmd) out = run_density_count(ds, dt);
        else if (*threshold_cmd) out = run_density_threshold(c_text);
        else if (*structural_cmd) out = run_density_structural(dlo, sizes_text);
        else if (*gcensus_cmd) out = run_graph_census(coloring, lo);
        else if (*corr_cmd) out = run_graph_correspondence(coloring, lo);
        else if (*baseline_cmd) out = run_graph_baseline(gn, colors, trials, cfg.seed);
        else if (*pipeline_cmd) out = run_graph_pipeline(coloring, terms, cfg.seed);
        else if (*bound_cmd) out = run_graph_bound(bk, bl, colors, bs, bn);
        else if (*repro_cmd) {
            if (!repro_list && repro_id.empty()) {
                std::cerr << "error: repro needs an id or --list\n";
                return kExitUsage;
            }
            out = run_repro(repro_id, repro_list, cfg.budget, cfg.seed);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    double timing_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    emit(out, cfg, timing_ms);
    return out.exit_code;
}
