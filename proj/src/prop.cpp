#include "gs/prop.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>

namespace gs {

namespace {

struct TripleIndex {
    struct Triple {
        int x, y, z;
    };
    std::vector<Triple> triples;
    std::vector<std::vector<int>> by_pos;  // triple ids touching each integer

    TripleIndex(int n, long long b) : by_pos(static_cast<size_t>(n) + 1) {
        for (int x = 1; x <= n; ++x)
            for (int y = x; y <= n; ++y) {
                long long z = static_cast<long long>(x) + y + b;
                if (z > n) break;
                int id = static_cast<int>(triples.size());
                triples.push_back({x, y, static_cast<int>(z)});
                by_pos[x].push_back(id);
                if (y != x) by_pos[y].push_back(id);
                if (z != x && z != y) by_pos[static_cast<int>(z)].push_back(id);
            }
    }
};

const TripleIndex& index_for(int n, long long b) {
    thread_local int cached_n = -1;
    thread_local long long cached_b = -1;
    thread_local std::unique_ptr<TripleIndex> cached;
    if (cached_n != n || cached_b != b) {
        cached = std::make_unique<TripleIndex>(n, b);
        cached_n = n;
        cached_b = b;
    }
    return *cached;
}

// Shrink candidate set; returns false on contradiction. New singletons are
// queued for rule re-firing.
bool shrink(DomainState& st, std::vector<int>& queue, int i, std::uint8_t mask,
            int via_x = 0, int via_y = 0, int via_z = 0) {
    std::uint8_t nm = st.cand[i] & mask;
    if (nm == st.cand[i]) return true;
    st.cand[i] = nm;
    if (nm == 0) {
        st.contradiction = true;
        return false;
    }
    if (std::popcount(nm) == 1) {
        st.trail.push_back({i, std::countr_zero(nm), via_x, via_y, via_z});
        queue.push_back(i);
    }
    return true;
}

void apply_rule(DomainState& st, std::vector<int>& queue, int x, int y, int z) {
    int fx = st.fixed_color(x), fy = st.fixed_color(y), fz = st.fixed_color(z);
    int fixed = (fx >= 0) + (fy >= 0) + (fz >= 0);
    if (fixed < 2) return;
    if (fixed == 3) {
        bool mono = fx == fy && fy == fz;
        bool rain = fx != fy && fy != fz && fx != fz;
        if (mono || rain) st.contradiction = true;
        return;
    }
    int open_pos, c1, c2;
    if (fx < 0) {
        open_pos = x;
        c1 = fy;
        c2 = fz;
    } else if (fy < 0) {
        open_pos = y;
        c1 = fx;
        c2 = fz;
    } else {
        open_pos = z;
        c1 = fx;
        c2 = fy;
    }
    std::uint8_t mask = (c1 == c2) ? static_cast<std::uint8_t>(kMaskFull & ~(1u << c1))
                                   : static_cast<std::uint8_t>((1u << c1) | (1u << c2));
    shrink(st, queue, open_pos, mask, x, y, z);
}

void propagate_from(DomainState& st, std::vector<int>& queue) {
    const TripleIndex& idx = index_for(st.n, st.b);
    while (!queue.empty() && !st.contradiction) {
        int i = queue.back();
        queue.pop_back();
        for (int id : idx.by_pos[i]) {
            const auto& t = idx.triples[id];
            apply_rule(st, queue, t.x, t.y, t.z);
            if (st.contradiction) return;
        }
    }
}

}  // namespace

int DomainState::fixed_color(int i) const {
    std::uint8_t m = cand[i];
    return std::popcount(m) == 1 ? std::countr_zero(m) : -1;
}

int DomainState::candidate_count(int i) const { return std::popcount(cand[i]); }

DomainState make_state(int n, long long b) {
    if (n < 1 || b < 0) throw std::invalid_argument("make_state: n >= 1, b >= 0 required");
    DomainState st;
    st.n = n;
    st.b = b;
    st.cand.assign(static_cast<size_t>(n) + 1, kMaskFull);
    st.cand[0] = 0;
    return st;
}

void propagate(DomainState& st) {
    if (st.contradiction) return;
    std::vector<int> queue;
    for (int i = 1; i <= st.n; ++i)
        if (st.fixed_color(i) >= 0) queue.push_back(i);
    propagate_from(st, queue);
}

void assume(DomainState& st, int x, int color) {
    if (x < 1 || x > st.n) throw std::out_of_range("assume: x outside [1, n]");
    if (color < 0 || color > 2) throw std::invalid_argument("assume: color must be 0..2");
    if (st.contradiction) return;
    std::vector<int> queue;
    if (!shrink(st, queue, x, static_cast<std::uint8_t>(1u << color))) return;
    propagate_from(st, queue);
}

namespace {

// Contradiction search with case splits: returns depth used (0 =
// propagation alone) or -1 if some branch stays open at the depth limit.
int refute(const DomainState& st, int depth_left) {
    if (st.contradiction) return 0;
    if (depth_left == 0) return -1;
    int best = -1, best_count = 4;
    for (int i = 1; i <= st.n; ++i) {
        int c = st.candidate_count(i);
        if (c >= 2 && c < best_count) {
            best_count = c;
            best = i;
        }
    }
    if (best < 0) return -1;  // fully fixed yet consistent: a completion exists
    int worst = 0;
    for (int color = 0; color < 3; ++color) {
        if (!(st.cand[best] & (1u << color))) continue;
        DomainState branch = st;
        assume(branch, best, color);
        int d = refute(branch, depth_left - 1);
        if (d < 0) return -1;
        worst = std::max(worst, d);
    }
    return worst + 1;
}

}  // namespace

ReplayReport replay(int n, long long b, const std::vector<Scenario>& scenarios,
                    int max_split_depth) {
    if (max_split_depth < 0) throw std::invalid_argument("replay: max_split_depth >= 0");
    ReplayReport rep;
    rep.n = n;
    rep.b = b;
    rep.max_split_depth = max_split_depth;
    int row_no = 0;
    for (const Scenario& sc : scenarios) {
        RowVerdict v;
        v.row = ++row_no;
        v.expected_contradiction = sc.expect_contradiction;
        DomainState st = make_state(n, b);
        for (auto [pos, color] : sc.seeds) {
            if (st.contradiction) break;
            assume(st, pos, color);
        }
        v.depth0_contradiction = st.contradiction;
        int d = refute(st, max_split_depth);
        v.contradiction = d >= 0;
        v.depth = d;
        v.flagged = v.depth0_contradiction != sc.expect_contradiction;
        if (sc.expect_contradiction && !v.contradiction) rep.all_expected_met = false;
        if (v.flagged) ++rep.flag_count;
        rep.rows.push_back(v);
    }
    return rep;
}

TableScenarios table_scenarios(char table, int k) {
    // k >= 5 keeps the referenced positions 3, k-1, k, k+2, 2k-1, 2k+1
    // pairwise distinct and clear of the base seeds
    if (k < 5) throw std::invalid_argument("table_scenarios: k >= 5 required");
    TableScenarios out;
    const bool odd_b = (table == 'a' || table == 'c');
    if (table != 'a' && table != 'b' && table != 'c' && table != 'd')
        throw std::invalid_argument("table_scenarios: table must be one of a, b, c, d");
    out.b = odd_b ? 2 * k + 1 : 2 * k;
    out.n = odd_b ? 8 * k + 9 : 8 * k + 10;
    const int b = static_cast<int>(out.b);
    const int A = 0, B = 1, C = 2;
    std::vector<std::pair<int, int>> base;
    if (table == 'a' || table == 'b')
        base = {{1, A}, {b + 2, B}, {2 * b + 3, A}, {3 * b + 4, C}, {4 * b + 5, A}};
    else
        base = {{1, A}, {b + 2, B}, {2 * b + 3, B}, {3 * b + 4, A}, {4 * b + 5, C}};

    using Row = std::pair<std::vector<std::pair<int, int>>, bool>;
    std::vector<Row> raw;
    switch (table) {
        case 'a':
            raw = {
                {{{3, A}}, false},
                {{{3, A}, {k, C}}, true},
                {{{3, A}, {k, B}}, true},
                {{{3, A}, {k, A}}, false},
                {{{3, A}, {k, A}, {2, B}}, true},
                {{{3, A}, {k, A}, {2, C}}, true},
                {{{2, A}, {3, A}, {k, A}}, false},
                {{{2, A}, {3, A}, {k, A}, {2 * k + 1, A}}, true},
                {{{2, A}, {3, A}, {k, A}, {2 * k + 1, B}}, true},
                {{{2, A}, {3, A}, {k, A}, {2 * k + 1, C}}, true},
                {{{3, B}}, false},
                {{{2, A}, {3, B}}, true},
                {{{2, B}, {3, B}}, true},
                {{{3, B}, {2, C}}, false},
                {{{2 * k - 1, A}, {3, B}, {2, C}}, true},
                {{{3, B}, {2 * k - 1, B}, {2, C}}, true},
                {{{3, B}, {2, C}, {2 * k - 1, C}}, true},
                {{{3, C}}, false},
                {{{2, A}, {3, C}}, true},
                {{{2, C}, {3, C}}, true},
                {{{2, B}, {3, C}}, false},
                {{{2 * k + 1, A}, {2, B}, {3, C}}, true},
                {{{2, B}, {2 * k + 1, B}, {3, C}}, true},
                {{{2, B}, {3, C}, {2 * k + 1, C}}, true},
            };
            break;
        case 'b':
            raw = {
                {{{2 * k + 1, A}}, false},
                {{{2, A}, {2 * k + 1, A}}, true},
                {{{2 * k + 1, A}, {2, B}}, true},
                {{{2 * k + 1, A}, {2, C}}, true},
                {{{2 * k + 1, B}}, false},
                {{{2, B}, {2 * k + 1, B}}, true},
                {{{2 * k + 1, B}, {2, C}}, true},
                {{{2, A}, {2 * k + 1, B}}, false},
                {{{2, A}, {k, A}, {2 * k + 1, B}}, true},
                {{{2, A}, {k, B}, {2 * k + 1, B}}, true},
                {{{2, A}, {2 * k + 1, B}, {k, C}}, true},
                {{{2 * k + 1, C}}, false},
                {{{2, B}, {2 * k + 1, C}}, true},
                {{{2, C}, {2 * k + 1, C}}, true},
                {{{2, A}, {2 * k + 1, C}}, false},
                {{{2, A}, {k, A}, {2 * k + 1, C}}, true},
                {{{2, A}, {k, B}, {2 * k + 1, C}}, true},
                // final row: the case split on k's color requires k here
                {{{2, A}, {k, C}, {2 * k + 1, C}}, true},
            };
            break;
        case 'c':
            raw = {
                {{{2 * k + 1, A}}, false},
                {{{3, A}, {2 * k + 1, A}, {k, C}}, true},
                {{{2 * k + 1, A}, {3, B}}, true},
                {{{2 * k + 1, A}, {3, C}}, true},
                {{{2 * k + 1, C}}, false},
                {{{3, A}, {2 * k + 1, C}}, true},
                {{{3, B}, {2 * k + 1, C}}, true},
                {{{3, C}, {2 * k + 1, C}}, true},
                {{{2 * k + 1, B}}, false},
                {{{3, B}, {2 * k + 1, B}}, true},
                {{{2 * k + 1, B}, {3, C}}, true},
                {{{3, A}, {2 * k + 1, B}}, false},
                {{{3, A}, {k - 1, A}, {2 * k + 1, B}}, true},
                {{{3, A}, {k - 1, B}, {2 * k + 1, B}}, true},
                {{{3, A}, {2 * k + 1, B}, {k - 1, C}}, false},
                {{{3, A}, {k + 2, A}, {2 * k + 1, B}, {k - 1, C}}, true},
                {{{3, A}, {k + 2, B}, {2 * k + 1, B}, {k - 1, C}}, true},
                {{{3, A}, {2 * k + 1, B}, {k - 1, C}, {k + 2, C}}, false},
            };
            break;
        default:  // 'd'
            raw = {
                {{{2 * k + 1, A}}, false},
                {{{2, A}, {2 * k + 1, A}}, true},
                {{{2 * k + 1, A}, {2, B}}, true},
                {{{2 * k + 1, A}, {2, C}}, true},
                {{{2 * k + 1, C}}, false},
                {{{2, A}, {2 * k + 1, C}}, true},
                {{{2, B}, {2 * k + 1, C}}, true},
                {{{2, C}, {2 * k + 1, C}}, true},
                {{{2 * k + 1, B}}, false},
                {{{k + 1, A}, {2 * k + 1, B}}, true},
                {{{k + 1, B}, {2 * k + 1, B}}, true},
                {{{2 * k + 1, B}, {k + 1, C}}, false},
                {{{3, B}, {2 * k + 1, B}, {k + 1, C}}, true},
                {{{2 * k + 1, B}, {3, C}, {k + 1, C}}, true},
                {{{3, A}, {2 * k + 1, B}, {k + 1, C}}, false},
            };
            break;
    }
    for (const Row& row : raw) {
        Scenario sc;
        sc.seeds = base;
        sc.seeds.insert(sc.seeds.end(), row.first.begin(), row.first.end());
        sc.expect_contradiction = row.second;
        out.rows.push_back(std::move(sc));
    }
    return out;
}

namespace {

struct ProveContext {
    unsigned long long nodes = 0;
    unsigned long long budget = 0;
    bool budget_hit = false;
};

// DFS over the domain state, assigning integers in increasing order with
// canonical first-use color order; propagation narrows future candidates.
bool prove_dfs(DomainState& st, int next, int used, ProveContext& ctx, Coloring& witness) {
    if (st.contradiction) return false;
    if (++ctx.nodes > ctx.budget) {
        ctx.budget_hit = true;
        return false;
    }
    // exactness pruning: remaining slots must cover the unused classes
    if (used + (st.n - next + 1) < 3) return false;
    if (next > st.n) {
        if (used != 3) return false;
        witness.lo = 1;
        witness.num_colors = 3;
        witness.values.resize(static_cast<size_t>(st.n));
        for (int i = 1; i <= st.n; ++i) witness.values[static_cast<size_t>(i) - 1] = st.fixed_color(i);
        return true;
    }
    int limit = std::min(used, 2);  // may open exactly the next unused class
    for (int color = 0; color <= limit; ++color) {
        if (!(st.cand[next] & (1u << color))) continue;
        DomainState branch = st;
        assume(branch, next, color);
        if (prove_dfs(branch, next + 1, std::max(used, color + 1), ctx, witness)) return true;
        if (ctx.budget_hit) return false;
    }
    return false;
}

}  // namespace

ProveResult prove_upper(int n, long long b, unsigned long long node_budget) {
    if (n < 3) throw std::invalid_argument("prove_upper: n >= 3 required");
    ProveResult res;
    ProveContext ctx;
    ctx.budget = node_budget;
    DomainState st = make_state(n, b);
    Coloring witness;
    bool found = prove_dfs(st, 1, 0, ctx, witness);
    res.nodes = ctx.nodes;
    if (found) {
        res.status = ProveResult::Status::Counterexample;
        res.counterexample = witness;
    } else if (ctx.budget_hit) {
        res.status = ProveResult::Status::Unknown;
    } else {
        res.status = ProveResult::Status::Proved;
    }
    return res;
}

}  // namespace gs
