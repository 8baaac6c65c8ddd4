#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gs/coloring.hpp"
#include "gs/construct.hpp"

using namespace gs;

TEST_CASE("star operator") {
    Coloring base = parse_coloring("1221");
    Coloring s = star_extend(base);
    CHECK(s.size() == 2 * base.size() + 1);
    CHECK(format_coloring(s) == "122131221");
    CHECK(s.num_colors == 3);
    CHECK(is_palindromic(s));
    CHECK(is_gallai_schur(s, Relation::eq(0)));
}

TEST_CASE("psi operator") {
    Coloring base = parse_coloring("1221");
    Coloring p = psi_extend(base);
    CHECK(p.size() == 4 * base.size() + 3);
    CHECK(format_coloring(p) == "1221312214122141221");
    CHECK(p.num_colors == 4);
    // the separator pattern r, r+1, r+1 is asymmetric, so psi outputs are
    // solution-free but not palindromic
    CHECK_FALSE(is_palindromic(p));
    CHECK(is_gallai_schur(p, Relation::eq(0)));
    CHECK(is_exact(p));
}

TEST_CASE("double star operator") {
    Coloring base = parse_coloring("1221");
    Coloring d = double_star_extend(base);
    CHECK(d.size() == 5 * base.size() + 4);
    CHECK(d.size() == 24);
    CHECK(is_palindromic(d));
    CHECK(d.num_colors == 4);
    CHECK(is_gallai_schur(d, Relation::eq(0)));
    CHECK(is_exact(d));
}

TEST_CASE("plus operator produces strict witnesses") {
    Coloring base = parse_coloring("122131221");  // 3 colors, length 9
    Coloring pl = plus_extend(base);
    CHECK(pl.size() == 9 * base.size() + 8);
    CHECK(pl.num_colors == base.num_colors + 2);
    CHECK(is_gallai_schur(pl, Relation::eq(0, true)));
    CHECK(is_exact(pl));
}

TEST_CASE("operator preconditions") {
    Coloring bad = parse_coloring("112");  // not palindromic
    CHECK_THROWS_AS(star_extend(bad), std::invalid_argument);
    CHECK_THROWS_AS(psi_extend(bad), std::invalid_argument);
    CHECK_THROWS_AS(double_star_extend(bad), std::invalid_argument);
    // force flag bypasses the shape check (result may contain solutions)
    Coloring forced = star_extend(bad, /*force=*/true);
    CHECK(forced.size() == 7);

    Coloring two = parse_coloring("1221");  // only 2 colors
    CHECK_THROWS_AS(plus_extend(two), std::invalid_argument);
    Coloring off = parse_coloring("12", 3);  // lo != 1
    CHECK_THROWS_AS(star_extend(off), std::invalid_argument);
}

TEST_CASE("palindromic family lengths and properties") {
    const long long expect_len[] = {4, 9, 24, 49, 124, 249, 624};
    for (int r = 2; r <= 8; ++r) {
        Coloring fam = palindromic_family(r);
        CHECK(fam.size() == expect_len[r - 2]);
        CHECK(fam.num_colors == r);
        CHECK(is_palindromic(fam));
        CHECK(is_exact(fam));
        CHECK(is_gallai_schur(fam, Relation::eq(0)));
    }
    CHECK(format_coloring(palindromic_family(2)) == "1221");
    CHECK_THROWS_AS(palindromic_family(1), std::invalid_argument);
}

TEST_CASE("offset-equation lower-bound colorings") {
    // maximal three-coloring avoiding x+y+b=z solutions of either kind
    const long long expect_n[] = {11, 18, 17, 26, 25, 34, 33, 42};
    for (int b = 1; b <= 8; ++b) {
        Coloring chi = nb_lower_coloring(b);
        CHECK(chi.size() == expect_n[b - 1] - 1);
        CHECK(chi.num_colors == 3);
        CHECK(is_exact(chi));
        CHECK(is_gallai_schur(chi, Relation::eq(b)));
    }
    CHECK(format_coloring(nb_lower_coloring(1)) == "1231331321");
    CHECK_THROWS_AS(nb_lower_coloring(0), std::invalid_argument);
}

TEST_CASE("interval-block coloring for the counting identity") {
    Coloring rz = rz_coloring(44);
    CHECK(rz.size() == 44);
    CHECK(rz.num_colors == 3);
    // class 0 on [1,8] and (20,22], class 1 on (8,20], class 2 on (22,44]
    CHECK(rz.at(1) == 0);
    CHECK(rz.at(8) == 0);
    CHECK(rz.at(9) == 1);
    CHECK(rz.at(20) == 1);
    CHECK(rz.at(21) == 0);
    CHECK(rz.at(22) == 0);
    CHECK(rz.at(23) == 2);
    CHECK(rz.at(44) == 2);
    CHECK_THROWS_AS(rz_coloring(45), std::invalid_argument);
    CHECK_THROWS_AS(rz_coloring(0), std::invalid_argument);
}

TEST_CASE("base-3 even-digit sequence") {
    std::vector<long long> seq = stanley_sequence(16);
    std::vector<long long> expect = {0, 1, 3, 4, 9, 10, 12, 13,
                                     27, 28, 30, 31, 36, 37, 39, 40};
    CHECK(seq == expect);
    CHECK(stanley_sequence(51).back() == 327);
    CHECK(stanley_sequence(126).back() == 1090);

    // no three-term arithmetic progression among the first 64 terms
    std::vector<long long> s = stanley_sequence(64);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            long long third = 2 * s[j] - s[i];
            bool found = std::binary_search(s.begin(), s.end(), third);
            REQUIRE_FALSE((found && third > s[j]));
        }
    CHECK_THROWS_AS(stanley_sequence(0), std::invalid_argument);
}

TEST_CASE("construction report") {
    Coloring fam = palindromic_family(4);
    ConstructionReport rep = make_report(fam, ClaimedProperty::PalindromicGallaiSchur);
    CHECK(rep.claimed_length == 24);
    CHECK(rep.checked);
    CHECK(rep.verified);

    ConstructionReport bad = make_report(parse_coloring("111"), ClaimedProperty::GallaiSchur);
    CHECK(bad.checked);
    CHECK_FALSE(bad.verified);

    // above the verification cap the claim is left unchecked
    Coloring fam8 = palindromic_family(8);
    Coloring big = double_star_extend(fam8);  // length 3124
    ConstructionReport huge = make_report(big, ClaimedProperty::GallaiSchur);
    CHECK(huge.claimed_length == 3124);
    CHECK_FALSE(huge.checked);

    ConstructionReport offset =
        make_report(nb_lower_coloring(2), ClaimedProperty::AvoidsMonoRainbowForB, 2);
    CHECK(offset.checked);
    CHECK(offset.verified);
    CHECK(offset.b == 2);
    CHECK_FALSE(property_name(ClaimedProperty::GallaiSchur).empty());
}

TEST_CASE("iterated chains stay solution-free up to length 2000") {
    // Chains iterate the palindromic operators (star, double star); at each
    // link all four operators are applied and every output of length <= 2000
    // is verified solution-free (strictly, for plus).
    auto verify_link = [](const Coloring& chi) {
        long long n = chi.size();
        if (2 * n + 1 <= 2000) CHECK(is_gallai_schur(star_extend(chi), Relation::eq(0)));
        if (4 * n + 3 <= 2000) CHECK(is_gallai_schur(psi_extend(chi), Relation::eq(0)));
        if (5 * n + 4 <= 2000)
            CHECK(is_gallai_schur(double_star_extend(chi), Relation::eq(0)));
        if (9 * n + 8 <= 2000 && chi.num_colors >= 3)
            CHECK(is_gallai_schur(plus_extend(chi), Relation::eq(0, true)));
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
}
