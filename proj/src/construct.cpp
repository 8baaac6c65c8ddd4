#include "gs/construct.hpp"

#include <stdexcept>

namespace gs {

namespace {

void require_palindromic_gs(const Coloring& chi, const char* op, bool force) {
    if (force) return;
    if (!is_palindromic(chi))
        throw std::invalid_argument(std::string(op) + ": input coloring is not palindromic");
    if (!is_gallai_schur(chi, Relation::eq(0)))
        throw std::invalid_argument(std::string(op) +
                                    ": input admits a monochromatic or rainbow solution");
}

Coloring concat_with_separators(const Coloring& chi, const std::vector<int>& separators,
                                int extra_colors) {
    Coloring out;
    out.lo = 1;
    out.num_colors = chi.num_colors + extra_colors;
    out.values = chi.values;
    for (int sep : separators) {
        out.values.push_back(sep);
        out.values.insert(out.values.end(), chi.values.begin(), chi.values.end());
    }
    return out;
}

}  // namespace

Coloring star_extend(const Coloring& chi, bool force) {
    require_palindromic_gs(chi, "star_extend", force);
    int r = chi.num_colors;
    return concat_with_separators(chi, {r}, 1);
}

Coloring psi_extend(const Coloring& chi, bool force) {
    require_palindromic_gs(chi, "psi_extend", force);
    int r = chi.num_colors;
    return concat_with_separators(chi, {r, r + 1, r + 1}, 2);
}

Coloring double_star_extend(const Coloring& chi, bool force) {
    require_palindromic_gs(chi, "double_star_extend", force);
    int r = chi.num_colors;
    return concat_with_separators(chi, {r, r + 1, r + 1, r}, 2);
}

Coloring plus_extend(const Coloring& chi, bool force) {
    if (!force && chi.num_colors < 3)
        throw std::invalid_argument("plus_extend: needs a base with at least 3 colors");
    require_palindromic_gs(chi, "plus_extend", force);
    int a = chi.num_colors, b = chi.num_colors + 1;
    return concat_with_separators(chi, {a, a, b, a, b, b, b, a}, 2);
}

Coloring palindromic_family(int r) {
    if (r < 2) throw std::invalid_argument("palindromic_family: r >= 2 required");
    Coloring even = parse_coloring("1221");
    for (int re = 4; re <= r; re += 2) even = double_star_extend(even);
    if (r % 2 == 0) return even;
    return star_extend(even);
}

Coloring nb_lower_coloring(long long b) {
    if (b < 1) throw std::invalid_argument("nb_lower_coloring: b >= 1 required");
    Coloring out;
    out.lo = 1;
    out.num_colors = 3;
    if (b == 1) {
        for (int i = 1; i <= 10; ++i) {
            int c;
            if (i == 1 || i == 4 || i == 7 || i == 10)
                c = 0;
            else if (i == 2 || i == 9)
                c = 1;
            else
                c = 2;
            out.values.push_back(c);
        }
        return out;
    }
    if (b % 2 == 0) {
        long long k = b / 2, n = 8 * k + 9;
        for (long long i = 1; i <= n; ++i) {
            if (i % 2 == 1)
                out.values.push_back(0);
            else if (i >= 2 * k + 4 && i <= 6 * k + 6)
                out.values.push_back(2);
            else
                out.values.push_back(1);
        }
        return out;
    }
    long long k = (b - 1) / 2, n = 8 * k + 8;
    for (long long i = 1; i <= n; ++i) {
        if (i % 2 == 0)
            out.values.push_back(1);
        else if (i >= 2 * k + 3 && i <= 6 * k + 5)
            out.values.push_back(2);
        else
            out.values.push_back(0);
    }
    return out;
}

Coloring rz_coloring(long long n) {
    if (n <= 0 || n % 44 != 0)
        throw std::invalid_argument("rz_coloring: n must be a positive multiple of 44");
    long long p1 = 4 * n / 22, p2 = 10 * n / 22, p3 = n / 2;
    Coloring out;
    out.lo = 1;
    out.num_colors = 3;
    out.values.reserve(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        if (i <= p1 || (i > p2 && i <= p3))
            out.values.push_back(0);
        else if (i <= p2)
            out.values.push_back(1);
        else
            out.values.push_back(2);
    }
    return out;
}

std::vector<long long> stanley_sequence(int n) {
    if (n < 1) throw std::invalid_argument("stanley_sequence: n >= 1 required");
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        long long v = 0, p = 1, x = i;
        while (x) {
            if (x & 1) v += p;
            x >>= 1;
            p *= 3;
        }
        out.push_back(v);
    }
    return out;
}

ConstructionReport make_report(const Coloring& output, ClaimedProperty prop, long long b,
                               int verify_cap) {
    ConstructionReport rep;
    rep.output = output;
    rep.claimed_length = output.size();
    rep.claimed_property = prop;
    rep.b = b;
    if (output.size() > verify_cap) return rep;
    rep.checked = true;
    switch (prop) {
        case ClaimedProperty::GallaiSchur:
            rep.verified = is_gallai_schur(output, Relation::eq(0));
            break;
        case ClaimedProperty::StrictGallaiSchur:
            rep.verified = is_gallai_schur(output, Relation::eq(0, /*strict=*/true));
            break;
        case ClaimedProperty::PalindromicGallaiSchur:
            rep.verified = is_palindromic(output) && is_gallai_schur(output, Relation::eq(0));
            break;
        case ClaimedProperty::AvoidsMonoRainbowForB:
            rep.verified = is_exact(output) && is_gallai_schur(output, Relation::eq(b));
            break;
    }
    return rep;
}

std::string property_name(ClaimedProperty p) {
    switch (p) {
        case ClaimedProperty::GallaiSchur: return "gallai-schur";
        case ClaimedProperty::StrictGallaiSchur: return "strict-gallai-schur";
        case ClaimedProperty::PalindromicGallaiSchur: return "palindromic-gallai-schur";
        case ClaimedProperty::AvoidsMonoRainbowForB: return "avoids-mono-rainbow-for-b";
    }
    return "?";
}

}  // namespace gs
