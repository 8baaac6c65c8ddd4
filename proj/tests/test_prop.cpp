#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gs/coloring.hpp"
#include "gs/prop.hpp"

using namespace gs;

TEST_CASE("propagation narrows via two-same and two-different rules") {
    // b = 1 on [1, 11]: fixing 1 -> A touches (1, 1, 3), so 3 loses A
    DomainState st = make_state(11, 1);
    assume(st, 1, 0);
    CHECK_FALSE(st.contradiction);
    CHECK(st.fixed_color(1) == 0);
    CHECK(st.cand[3] == (kMaskB | kMaskC));
    CHECK(st.candidate_count(3) == 2);

    // no seeds: propagation alone fixes nothing
    DomainState blank = make_state(20, 0);
    propagate(blank);
    CHECK_FALSE(blank.contradiction);
    for (int i = 1; i <= 20; ++i) CHECK(blank.cand[i] == kMaskFull);
}

TEST_CASE("six seeds force a contradiction by propagation alone") {
    DomainState st = make_state(49, 11);
    const std::pair<int, int> seeds[] = {{1, 0}, {25, 0}, {49, 0},
                                         {37, 2}, {3, 0}, {5, 2}};
    for (auto [x, c] : seeds) {
        if (st.contradiction) break;
        assume(st, x, c);
    }
    CHECK(st.contradiction);
}

TEST_CASE("assume validates input and detects conflicts") {
    DomainState st = make_state(10, 0);
    CHECK_THROWS_AS(assume(st, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(assume(st, 11, 0), std::out_of_range);
    CHECK_THROWS_AS(assume(st, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(assume(st, 3, -1), std::invalid_argument);

    assume(st, 2, 1);
    assume(st, 2, 1);  // idempotent
    CHECK_FALSE(st.contradiction);
    assume(st, 2, 0);  // conflicts with the earlier fix
    CHECK(st.contradiction);
}

TEST_CASE("fixpoint is order independent") {
    std::mt19937_64 rng(555);
    std::vector<std::pair<int, int>> seeds = {{1, 0}, {14, 1}, {29, 0}, {40, 2}};
    DomainState ref = make_state(49, 11);
    for (auto [x, c] : seeds)
        if (!ref.contradiction) assume(ref, x, c);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(seeds.begin(), seeds.end(), rng);
        DomainState st = make_state(49, 11);
        for (auto [x, c] : seeds)
            if (!st.contradiction) assume(st, x, c);
        REQUIRE(st.contradiction == ref.contradiction);
        if (!st.contradiction) REQUIRE(st.cand == ref.cand);
    }
}

TEST_CASE("table construction validates k") {
    CHECK_THROWS_AS(table_scenarios('a', 4), std::invalid_argument);
    CHECK_THROWS_AS(table_scenarios('e', 5), std::invalid_argument);
    TableScenarios a = table_scenarios('a', 5);
    CHECK(a.b == 11);
    CHECK(a.n == 49);
    CHECK(a.rows.size() == 24);
    TableScenarios b = table_scenarios('b', 5);
    CHECK(b.b == 10);
    CHECK(b.n == 50);
    CHECK(b.rows.size() == 18);
    CHECK(table_scenarios('c', 5).rows.size() == 18);
    CHECK(table_scenarios('d', 5).rows.size() == 15);
}

TEST_CASE("replay of the four forced-color tables at k = 5") {
    struct Expected {
        char table;
        std::vector<int> flagged_rows;
    };
    const Expected cases[] = {
        {'a', {4, 7}},
        {'b', {15}},
        {'c', {12, 15, 18}},
        {'d', {}},
    };
    for (const Expected& ex : cases) {
        CAPTURE(ex.table);
        TableScenarios ts = table_scenarios(ex.table, 5);
        ReplayReport rep = replay(ts.n, ts.b, ts.rows, 2);
        REQUIRE(rep.all_expected_met);
        std::vector<int> flagged;
        for (const RowVerdict& v : rep.rows) {
            if (v.flagged) flagged.push_back(v.row);
            if (v.expected_contradiction) {
                // every expected contradiction closes by propagation alone
                REQUIRE(v.contradiction);
                REQUIRE(v.depth == 0);
            }
            if (v.contradiction) REQUIRE(v.depth <= 2);
        }
        REQUIRE(flagged == ex.flagged_rows);
        REQUIRE(rep.flag_count == static_cast<int>(ex.flagged_rows.size()));
    }
}

TEST_CASE("flags stay stable across k") {
    // the replay outcome is structural, not tied to one k
    for (int k : {5, 6, 9}) {
        TableScenarios ts = table_scenarios('d', k);
        ReplayReport rep = replay(ts.n, ts.b, ts.rows, 2);
        CAPTURE(k);
        REQUIRE(rep.all_expected_met);
        REQUIRE(rep.flag_count == 0);
    }
}

TEST_CASE("exhaustive upper-bound proofs for small offsets") {
    // b = 1: every exact 3-coloring of [1, 11] has a solution; [1, 10] does not
    ProveResult p11 = prove_upper(11, 1);
    CHECK(p11.status == ProveResult::Status::Proved);
    ProveResult p10 = prove_upper(10, 1);
    REQUIRE(p10.status == ProveResult::Status::Counterexample);
    REQUIRE(p10.counterexample.has_value());
    const Coloring& w = *p10.counterexample;
    CHECK(w.size() == 10);
    CHECK(is_exact(w));
    CHECK(w.num_colors == 3);
    CHECK(is_gallai_schur(w, Relation::eq(1)));

    // b = 2 boundary: 18 closed, 17 open
    CHECK(prove_upper(18, 2).status == ProveResult::Status::Proved);
    ProveResult p17 = prove_upper(17, 2);
    REQUIRE(p17.status == ProveResult::Status::Counterexample);
    CHECK(is_gallai_schur(*p17.counterexample, Relation::eq(2)));

    // b = 3 boundary: 17 closed, 16 open
    CHECK(prove_upper(17, 3).status == ProveResult::Status::Proved);
    CHECK(prove_upper(16, 3).status == ProveResult::Status::Counterexample);
}

TEST_CASE("tiny budget yields unknown") {
    ProveResult r = prove_upper(25, 1, /*node_budget=*/5);
    CHECK(r.status == ProveResult::Status::Unknown);
    CHECK(r.nodes >= 5);
}
