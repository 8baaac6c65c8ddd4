#include "gs/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gs {

int Coloring::at(long long i) const {
    if (!in_range(i)) throw std::out_of_range("coloring index " + std::to_string(i));
    return values[static_cast<size_t>(i - lo)];
}

TripleClass classify(const Coloring& chi, long long x, long long y, long long z) {
    if (!(x <= y && y < z)) throw std::invalid_argument("classify requires x <= y < z");
    int cx = chi.at(x), cy = chi.at(y), cz = chi.at(z);
    if (cx == cy && cy == cz) return TripleClass::Monochromatic;
    if (cx != cy && cy != cz && cx != cz) return TripleClass::Rainbow;
    return TripleClass::Neither;
}

namespace {

TripleCensus census_eq(const Coloring& chi, long long b, bool strict) {
    TripleCensus out;
    const long long lo = chi.lo, hi = chi.hi();
    for (long long x = lo; x <= hi; ++x) {
        for (long long y = strict ? x + 1 : x; y <= hi; ++y) {
            long long z = x + y + b;
            if (z > hi) break;
            if (z < lo) continue;
            ++out.total;
            int cx = chi.at(x), cy = chi.at(y), cz = chi.at(z);
            if (cx == cy && cy == cz)
                ++out.mono;
            else if (cx != cy && cy != cz && cx != cz)
                ++out.rainbow;
        }
    }
    return out;
}

// O(n^2) via per-color suffix counts: for a fixed pair (x, y) every z in
// (x+y, hi] is a solution, so mono pairs contribute the count of z of their
// shared color and mixed pairs contribute the z's avoiding both pair colors.
TripleCensus census_lt(const Coloring& chi, bool strict) {
    TripleCensus out;
    const long long lo = chi.lo, hi = chi.hi();
    const int n = chi.size(), r = chi.num_colors;
    // suffix[c * (n+1) + t] = #{ i >= lo + t : chi(i) = c }
    std::vector<long long> suffix(static_cast<size_t>(r) * (n + 1), 0);
    for (int t = n - 1; t >= 0; --t)
        for (int c = 0; c < r; ++c)
            suffix[static_cast<size_t>(c) * (n + 1) + t] =
                suffix[static_cast<size_t>(c) * (n + 1) + t + 1] + (chi.values[t] == c ? 1 : 0);
    auto suf = [&](int c, long long v) -> long long {  // #{ z >= v, z <= hi, color c }
        if (v > hi) return 0;
        long long t = std::max<long long>(v - lo, 0);
        return suffix[static_cast<size_t>(c) * (n + 1) + t];
    };
    for (long long x = lo; x <= hi; ++x) {
        for (long long y = strict ? x + 1 : x; y <= hi; ++y) {
            long long s = x + y;
            if (s >= hi) break;
            long long k = hi - s;
            out.total += k;
            int cx = chi.at(x), cy = chi.at(y);
            if (cx == cy)
                out.mono += suf(cx, s + 1);
            else
                out.rainbow += k - suf(cx, s + 1) - suf(cy, s + 1);
        }
    }
    return out;
}

}  // namespace

TripleCensus census(const Coloring& chi, const Relation& rel) {
    if (rel.kind == RelationKind::EquationPlusB) return census_eq(chi, rel.b, rel.strict);
    return census_lt(chi, rel.strict);
}

bool is_gallai_schur(const Coloring& chi, const Relation& rel) {
    TripleCensus c = census(chi, rel);
    return c.mono == 0 && c.rainbow == 0;
}

bool is_palindromic(const Coloring& chi) {
    return std::equal(chi.values.begin(), chi.values.end(), chi.values.rbegin());
}

bool is_k_exact(const Coloring& chi, int k) {
    if (k < 0) throw std::invalid_argument("is_k_exact requires k >= 0");
    std::vector<long long> counts(chi.num_colors, 0);
    for (int v : chi.values) ++counts[v];
    return std::all_of(counts.begin(), counts.end(), [&](long long c) { return c >= k; });
}

namespace {

int symbol_to_color(char ch) {
    if (ch >= '1' && ch <= '9') return ch - '1';
    if (std::isalpha(static_cast<unsigned char>(ch)))
        return 9 + (std::toupper(static_cast<unsigned char>(ch)) - 'A');
    throw std::invalid_argument(std::string("unknown color symbol '") + ch + "'");
}

char color_to_symbol(int c) {
    if (c < 0 || c >= 9 + 26) throw std::invalid_argument("color id out of printable range");
    return c < 9 ? static_cast<char>('1' + c) : static_cast<char>('A' + c - 9);
}

}  // namespace

Coloring parse_coloring(std::string_view text, int lo) {
    std::vector<int> vals;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        int c = symbol_to_color(ch);
        ++i;
        long long count = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("run-length '^' needs a count");
            count = std::stoll(std::string(text.substr(start, i - start)));
            if (count < 1) throw std::invalid_argument("run-length count must be >= 1");
        }
        vals.insert(vals.end(), static_cast<size_t>(count), c);
    }
    if (vals.empty()) throw std::invalid_argument("empty coloring string");
    Coloring out;
    out.lo = lo;
    out.values = std::move(vals);
    out.num_colors = *std::max_element(out.values.begin(), out.values.end()) + 1;
    return out;
}

std::string format_values(const std::vector<int>& values) {
    std::string s;
    s.reserve(values.size());
    for (int v : values) s += color_to_symbol(v);
    return s;
}

std::string format_coloring(const Coloring& chi) { return format_values(chi.values); }

Coloring reversed(const Coloring& chi) {
    Coloring out = chi;
    std::reverse(out.values.begin(), out.values.end());
    return out;
}

}  // namespace gs
