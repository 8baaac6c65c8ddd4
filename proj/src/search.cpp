#include "gs/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gs/construct.hpp"
#include "gs/graphs.hpp"

namespace gs {

std::string SearchProblem::describe() const {
    std::string s = "r=" + std::to_string(r);
    if (rel.kind == RelationKind::EquationPlusB)
        s += " rel=eq b=" + std::to_string(rel.b);
    else
        s += " rel=lt";
    s += rel.strict ? " strict" : "";
    s += mode == Mode::MonoOnly ? " mono" : " mono+rainbow";
    s += exact_required ? " exact" : "";
    return s;
}

std::uint64_t SearchProblem::config_hash(int n) const {
    std::string key = describe() + " n=" + std::to_string(n);
    std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

struct Engine {
    int n;
    int r;
    bool exact;
    bool rainbow_forbidden;
    unsigned long long budget;
    unsigned long long nodes = 0;
    bool budget_hit = false;

    // triples indexed by their middle element y (x <= y < z), so that when y
    // is assigned both x and y are known and z's mask can be narrowed
    std::vector<std::vector<std::pair<int, int>>> by_y;  // y -> (x, z)

    std::vector<int> color;           // 1-based; -1 = unassigned
    std::vector<std::uint32_t> cand;  // candidate masks
    std::vector<std::pair<int, std::uint32_t>> trail;

    Engine(const SearchProblem& p, int n_, unsigned long long budget_)
        : n(n_),
          r(p.r),
          exact(p.exact_required),
          rainbow_forbidden(p.mode == SearchProblem::Mode::MonoPlusRainbow),
          budget(budget_),
          by_y(static_cast<size_t>(n_) + 1),
          color(static_cast<size_t>(n_) + 1, -1),
          cand(static_cast<size_t>(n_) + 1, (r < 32 ? (1u << r) : 0u) - 1u) {
        if (p.r < 1 || p.r > 16) throw std::invalid_argument("extremal: r must be in [1,16]");
        if (p.rel.kind == RelationKind::EquationPlusB) {
            for (int x = 1; x <= n; ++x) {
                if (p.rel.strict && 2 * x + p.rel.b > n) break;
                for (int y = x + (p.rel.strict ? 1 : 0); y <= n; ++y) {
                    long long z = static_cast<long long>(x) + y + p.rel.b;
                    if (z > n) break;
                    by_y[y].push_back({x, static_cast<int>(z)});
                }
            }
        } else {
            for (int x = 1; x <= n; ++x)
                for (int y = x + (p.rel.strict ? 1 : 0); y <= n; ++y)
                    for (int z = x + y + 1; z <= n; ++z) by_y[y].push_back({x, z});
        }
    }

    bool shrink(int pos, std::uint32_t mask) {
        std::uint32_t nm = cand[pos] & mask;
        if (nm == cand[pos]) return true;
        trail.push_back({pos, cand[pos]});
        cand[pos] = nm;
        return nm != 0;
    }

    // narrow cand[z] for every triple (x, y=p, z): z must not complete a
    // monochromatic triple, nor (when forbidden) a rainbow one
    bool forward(int p) {
        for (auto [x, z] : by_y[p]) {
            int cx = color[x], cy = color[p];
            std::uint32_t mask;
            if (cx == cy)
                mask = ~(1u << cx);
            else if (rainbow_forbidden)
                mask = (1u << cx) | (1u << cy);
            else
                continue;
            if (!shrink(z, mask)) return false;
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail.size() > mark) {
            cand[trail.back().first] = trail.back().second;
            trail.pop_back();
        }
    }

    bool dfs(int pos, int used) {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        if (pos > n) return !exact || used == r;
        if (exact && used + (n - pos + 1) < r) return false;
        int limit = std::min(used, r - 1);
        for (int c = 0; c <= limit; ++c) {
            if (!(cand[pos] & (1u << c))) continue;
            color[pos] = c;
            size_t mark = trail.size();
            if (forward(pos) && dfs(pos + 1, std::max(used, c + 1))) return true;
            undo(mark);
            color[pos] = -1;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

Certificate extremal(const SearchProblem& problem, int n, unsigned long long node_budget) {
    if (n < 1) throw std::invalid_argument("extremal: n >= 1 required");
    Engine eng(problem, n, node_budget);
    bool found = eng.dfs(1, 0);
    Certificate cert;
    cert.n = n;
    cert.nodes_explored = eng.nodes;
    cert.config_hash = problem.config_hash(n);
    if (found) {
        cert.kind = Certificate::Kind::Witness;
        Coloring chi;
        chi.lo = 1;
        chi.num_colors = problem.r;
        chi.values.assign(eng.color.begin() + 1, eng.color.end());
        cert.witness = std::move(chi);
    } else if (eng.budget_hit) {
        cert.kind = Certificate::Kind::Unknown;
    } else {
        cert.kind = Certificate::Kind::Exhaustion;
    }
    return cert;
}

NumberResult compute_number(const SearchProblem& problem, unsigned long long node_budget,
                            int max_n) {
    NumberResult res;
    for (int n = 1; n <= max_n; ++n) {
        if (res.nodes_total >= node_budget) break;
        Certificate cert = extremal(problem, n, node_budget - res.nodes_total);
        res.nodes_total += cert.nodes_explored;
        if (cert.kind == Certificate::Kind::Unknown) break;
        if (cert.kind == Certificate::Kind::Witness) {
            if (res.first_witness_n == 0) res.first_witness_n = n;
        } else if (res.first_witness_n != 0) {
            res.status = NumberResult::Status::Found;
            res.value = n;
            res.last_completed_n = n;
            return res;
        }
        res.last_completed_n = n;
    }
    res.status = NumberResult::Status::Unknown;
    return res;
}

BoundChainReport verify_bound_chain(int r) {
    if (r < 3) throw std::invalid_argument("verify_bound_chain: r >= 3 required");
    BoundChainReport rep;
    rep.r = r;

    Coloring witness =
        r >= 5 ? plus_extend(palindromic_family(r - 2)) : palindromic_family(r);
    rep.witness_length = witness.size();
    // strict avoidance: no monochromatic or rainbow strict triple
    TripleCensus strict = census(witness, Relation::eq(0, true));
    rep.witness_verified =
        witness.num_colors == r && is_exact(witness) && strict.mono == 0 && strict.rainbow == 0;
    rep.lower = rep.witness_length + 1;

    rep.stanley_terms = g33(r);
    std::vector<long long> seq = stanley_sequence(static_cast<int>(rep.stanley_terms));
    rep.upper = seq.back();

    long long p = 1;
    for (int i = 0; i < r / 2; ++i) p *= 5;
    rep.f_value = (r % 2 == 0) ? (9.0 / 5.0) * static_cast<double>(p) + 9.0
                               : (18.0 / 5.0) * static_cast<double>(p) + 9.0;
    rep.growth_cap = (43.0 / 4.0) * std::pow(std::pow(3.0, std::log2(std::sqrt(5.0))), r);
    rep.lower_le_upper = rep.lower <= rep.upper;
    return rep;
}

}  // namespace gs
