#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gs/coloring.hpp"

using namespace gs;

namespace {

// independent reference census: literal triple loops
TripleCensus brute_census(const Coloring& chi, const Relation& rel) {
    TripleCensus out;
    auto tally = [&](long long x, long long y, long long z) {
        ++out.total;
        TripleClass c = classify(chi, x, y, z);
        if (c == TripleClass::Monochromatic) ++out.mono;
        if (c == TripleClass::Rainbow) ++out.rainbow;
    };
    for (long long x = chi.lo; x <= chi.hi(); ++x)
        for (long long y = x + (rel.strict ? 1 : 0); y <= chi.hi(); ++y) {
            if (rel.kind == RelationKind::EquationPlusB) {
                long long z = x + y + rel.b;
                if (chi.in_range(z) && z > y) tally(x, y, z);
            } else {
                for (long long z = y + 1; z <= chi.hi(); ++z)
                    if (x + y < z) tally(x, y, z);
            }
        }
    return out;
}

Coloring random_coloring(std::mt19937_64& rng, int n, int r, int lo = 1) {
    Coloring chi;
    chi.lo = lo;
    chi.num_colors = r;
    chi.values.resize(static_cast<size_t>(n));
    std::uniform_int_distribution<int> pick(0, r - 1);
    for (auto& v : chi.values) v = pick(rng);
    return chi;
}

}  // namespace

TEST_CASE("parse and format") {
    Coloring chi = parse_coloring("1221");
    CHECK(chi.values == std::vector<int>{0, 1, 1, 0});
    CHECK(chi.num_colors == 2);
    CHECK(chi.lo == 1);
    CHECK(chi.hi() == 4);
    CHECK(format_coloring(chi) == "1221");

    CHECK(format_coloring(parse_coloring("1^2 2^2")) == "1122");
    CHECK(format_coloring(parse_coloring("1^3")) == "111");
    CHECK(format_coloring(parse_coloring("1 2 1")) == "121");

    Coloring ten = parse_coloring("19A");  // colors 0, 8, 9
    CHECK(ten.values == std::vector<int>{0, 8, 9});
    CHECK(format_coloring(ten) == "19A");

    Coloring shifted = parse_coloring("12", 5);
    CHECK(shifted.lo == 5);
    CHECK(shifted.hi() == 6);
    CHECK(shifted.at(5) == 0);
    CHECK(shifted.at(6) == 1);
    CHECK_THROWS_AS((void)shifted.at(4), std::out_of_range);
    CHECK_THROWS_AS((void)shifted.at(7), std::out_of_range);

    CHECK_THROWS_AS(parse_coloring(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_coloring("1!2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coloring("1^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coloring("1^0"), std::invalid_argument);
}

TEST_CASE("classify basics") {
    Coloring chi = parse_coloring("1231");
    CHECK(classify(chi, 1, 1, 2) == TripleClass::Neither);       // colors 0 0 1
    CHECK(classify(chi, 1, 2, 3) == TripleClass::Rainbow);       // colors 0 1 2
    CHECK(classify(chi, 1, 3, 4) == TripleClass::Neither);       // colors 0 2 0
    Coloring mono = parse_coloring("111");
    CHECK(classify(mono, 1, 1, 2) == TripleClass::Monochromatic);
    CHECK_THROWS_AS(classify(chi, 2, 1, 3), std::invalid_argument);  // x > y
    CHECK_THROWS_AS(classify(chi, 1, 3, 2), std::invalid_argument);  // z <= y
    CHECK_THROWS_AS(classify(chi, 1, 2, 9), std::out_of_range);
}

TEST_CASE("census equation examples") {
    CHECK(census(parse_coloring("1221"), Relation::eq(0)) == TripleCensus{0, 0, 4});
    CHECK(census(parse_coloring("111"), Relation::eq(0)) == TripleCensus{2, 0, 2});

    // offset b=2, the 17-digit three-interval-free witness
    Coloring w = parse_coloring("12121313131312121");
    TripleCensus c = census(w, Relation::eq(2));
    CHECK(c.mono == 0);
    CHECK(c.rainbow == 0);
    CHECK(c.total > 0);
    CHECK(is_gallai_schur(w, Relation::eq(2)));
    CHECK(is_palindromic(w));

    CHECK(is_gallai_schur(parse_coloring("1221312214122141221"), Relation::eq(0)));
    CHECK_FALSE(is_gallai_schur(parse_coloring("111"), Relation::eq(0)));
}

TEST_CASE("census strict variant drops x == y") {
    Coloring chi = parse_coloring("111111");
    TripleCensus all = census(chi, Relation::eq(0));
    TripleCensus strict = census(chi, Relation::eq(0, true));
    // non-strict solutions in [1,6]: z=2..6 contribute floor(z/2) pairs
    CHECK(all.total == 1 + 1 + 2 + 2 + 3);
    // strict drops (1,1,2), (2,2,4), (3,3,6)
    CHECK(strict.total == all.total - 3);
    CHECK(all.mono == all.total);
    CHECK(strict.mono == strict.total);
}

TEST_CASE("census inequality example") {
    // x+y<z in [1,5]: 7 solutions, all colors equal
    Coloring chi = parse_coloring("11111");
    TripleCensus c = census(chi, Relation::lt());
    CHECK(c.total == 7);
    CHECK(c.mono == 7);
    CHECK(c.rainbow == 0);
}

TEST_CASE("census agrees with brute reference on random colorings") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 40);
        int r = 1 + static_cast<int>(rng() % 4);
        int lo = (trial % 3 == 0) ? 1 : 1 + static_cast<int>(rng() % 7);
        Coloring chi = random_coloring(rng, n, r, lo);
        for (Relation rel : {Relation::eq(0), Relation::eq(1), Relation::eq(3),
                             Relation::eq(0, true), Relation::lt(), Relation::lt(true)}) {
            TripleCensus fast = census(chi, rel);
            TripleCensus ref = brute_census(chi, rel);
            REQUIRE(fast == ref);
        }
    }
}

TEST_CASE("palindromic and exactness predicates") {
    CHECK(is_palindromic(parse_coloring("1221")));
    CHECK(is_palindromic(parse_coloring("121")));
    CHECK_FALSE(is_palindromic(parse_coloring("112")));

    CHECK(is_exact(parse_coloring("123")));
    Coloring skip = parse_coloring("113");  // color 1 unused
    CHECK_FALSE(is_exact(skip));
    CHECK(is_k_exact(parse_coloring("112233"), 2));
    CHECK_FALSE(is_k_exact(parse_coloring("112233"), 3));
    CHECK(is_k_exact(parse_coloring("1"), 1));
}

TEST_CASE("reversed preserves census counts") {
    std::mt19937_64 rng(7);
    Coloring chi = random_coloring(rng, 25, 3);
    Coloring rev = reversed(chi);
    CHECK(rev.values.front() == chi.values.back());
    CHECK(rev.lo == chi.lo);
    // reversal is an anti-isomorphism for x+y=z only when palindromic, but
    // double reversal is the identity
    CHECK(reversed(rev).values == chi.values);
    Coloring pal = parse_coloring("122131221");
    CHECK(reversed(pal).values == pal.values);
}

TEST_CASE("interval with lo > 1 counts only in-range solutions") {
    // [4,10], x+y=z: (4,4,8), (4,5,9), (4,6,10), (5,5,10)
    Coloring chi = parse_coloring("1111111", 4);
    TripleCensus c = census(chi, Relation::eq(0));
    CHECK(c.total == 4);
    CHECK(c.mono == 4);
    // strict drops (4,4,8) and (5,5,10)
    CHECK(census(chi, Relation::eq(0, true)).total == 2);
}
