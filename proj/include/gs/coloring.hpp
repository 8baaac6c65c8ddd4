#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gs {

// A total color assignment on the integer interval [lo, lo+values.size()-1].
// Color ids are 0-based internally; text I/O uses 1-based digits then letters
// ('1'..'9' -> 0..8, 'A'.. -> 9..).
struct Coloring {
    int lo = 1;
    std::vector<int> values;
    int num_colors = 1;

    int size() const { return static_cast<int>(values.size()); }
    int hi() const { return lo + size() - 1; }
    bool in_range(long long i) const { return i >= lo && i <= hi(); }
    int at(long long i) const;  // throws std::out_of_range outside [lo, hi]
};

enum class RelationKind { EquationPlusB, Inequality };

// Which solution pattern is counted: x+y+b=z (b >= 0) or x+y<z.
// strict=true counts only x<y; otherwise x<=y. Inequality ignores b.
struct Relation {
    RelationKind kind = RelationKind::EquationPlusB;
    long long b = 0;
    bool strict = false;

    static Relation eq(long long b = 0, bool strict = false) {
        return Relation{RelationKind::EquationPlusB, b, strict};
    }
    static Relation lt(bool strict = false) {
        return Relation{RelationKind::Inequality, 0, strict};
    }
};

enum class TripleClass { Monochromatic, Rainbow, Neither };

struct TripleCensus {
    long long mono = 0;
    long long rainbow = 0;
    long long total = 0;  // all solutions regardless of color

    bool operator==(const TripleCensus&) const = default;
};

// Classify one solution triple; caller supplies lo <= x <= y < z <= hi.
// A triple with x == y can never be Rainbow (only two positions carry
// distinct values).
TripleClass classify(const Coloring& chi, long long x, long long y, long long z);

// Count every solution of rel inside [lo, hi], each once, and classify it.
// O(n^2), exact integer arithmetic.
TripleCensus census(const Coloring& chi, const Relation& rel);

// census mono == rainbow == 0.
bool is_gallai_schur(const Coloring& chi, const Relation& rel);

// values read the same reversed.
bool is_palindromic(const Coloring& chi);

// every color id in [0, num_colors) appears at least k times; k = 1 is
// exactness (all colors used).
bool is_k_exact(const Coloring& chi, int k);
inline bool is_exact(const Coloring& chi) { return is_k_exact(chi, 1); }

// Text format: plain symbol string ("1221") or run-length tokens
// ("1^4 2^6 3^4"). Unknown symbols and empty input throw
// std::invalid_argument.
Coloring parse_coloring(std::string_view text, int lo = 1);
std::string format_coloring(const Coloring& chi);
std::string format_values(const std::vector<int>& values);

Coloring reversed(const Coloring& chi);

}  // namespace gs
