#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gs/coloring.hpp"

namespace gs {

// Edge coloring of a complete graph on vertices 1..vertex_count, stored as
// the upper triangle of the adjacency color matrix.
struct EdgeColoring {
    int vertex_count = 0;
    int num_colors = 1;
    std::vector<int> colors;  // index via edge_index

    static EdgeColoring complete(int n, int r, int fill_color = 0);
    size_t edge_index(int i, int j) const;  // 1-based, i != j, throws otherwise
    int at(int i, int j) const { return colors[edge_index(i, j)]; }
    void set(int i, int j, int c) { colors[edge_index(i, j)] = c; }
    long long edge_count() const {
        return static_cast<long long>(vertex_count) * (vertex_count - 1) / 2;
    }
};

struct TriangleCensus {
    long long mono = 0;
    long long rainbow = 0;
    long long total = 0;  // C(vertex_count, 3)

    bool operator==(const TriangleCensus&) const = default;
};

// Edge {i, j} of K_{n+1} takes chi(|i - j|) for chi on [1, n].
EdgeColoring difference_coloring(const Coloring& chi);

// Exact counts by the cubic triple loop.
TriangleCensus triangle_census(const EdgeColoring& ec);

// Independent algorithm: mono by per-color adjacency-bitset triangle
// counting, rainbow from the per-vertex color-degree identity
//   rainbow = C(n,3) + 2*mono - sum_v sum_c C(deg_c(v), 2).
TriangleCensus triangle_census_by_identity(const EdgeColoring& ec);

// Exact identity: mono+rainbow triangles of difference_coloring(chi) equal
// the sum over monochromatic-or-rainbow solutions (x,y,z) of x+y=z, x<=y,
// of (n+1-z) * (2 if x<y else 1). Throws when chi is longer than cap.
bool correspondence_check(const Coloring& chi, int cap = 200);

// Least vertex count forcing a rainbow or monochromatic triangle in every
// r-edge-coloring of the complete graph: 5^{r/2}+1 (r even),
// 2*5^{(r-1)/2}+1 (r odd); r >= 3.
long long g33(int r);

struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// s * C(n, m) / C(G(k,l;r), m) with m = min(k, l), exact rational.
// Only (k, l) = (3, 3) has a known closed-form G; other shapes and n < G
// throw std::invalid_argument.
Rational triangle_count_lower_bound(int k, int l, int r, long long s, long long n);

struct BaselineStats {
    int n = 0, r = 0, trials = 0;
    std::uint64_t seed = 0;
    double mono_mean = 0, mono_sd = 0;
    double rainbow_mean = 0, rainbow_sd = 0;
};

// Uniform random edge colorings; mean and population-sd of the mono and
// rainbow triangle counts. Deterministic for a fixed seed.
BaselineStats random_baseline(int n, int r, int trials, std::uint64_t seed);

struct StrictTripleResult {
    bool found = false;
    long long x = 0, y = 0, z = 0;
    TripleClass cls = TripleClass::Neither;
};

// Pipeline: label K_terms by the first `terms` Stanley values, color edge
// {i, j} by chi(a_j - a_i), locate a monochromatic or rainbow triangle and
// map it back to a strict (x < y) triple with x+y = z. chi must cover
// [1, a_terms]. A triangle is guaranteed whenever terms >= g33(r).
StrictTripleResult find_strict_triple_via_graph(const Coloring& chi, int terms);

}  // namespace gs
