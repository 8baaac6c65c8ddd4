#include "gs/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gs/construct.hpp"

namespace gs {

EdgeColoring EdgeColoring::complete(int n, int r, int fill_color) {
    if (n < 1 || r < 1) throw std::invalid_argument("EdgeColoring: n, r >= 1 required");
    EdgeColoring ec;
    ec.vertex_count = n;
    ec.num_colors = r;
    ec.colors.assign(static_cast<size_t>(n) * (n - 1) / 2, fill_color);
    return ec;
}

size_t EdgeColoring::edge_index(int i, int j) const {
    if (i == j) throw std::invalid_argument("edge_index: loop edges do not exist");
    if (i < 1 || j < 1 || i > vertex_count || j > vertex_count)
        throw std::out_of_range("edge_index: vertex outside 1..vertex_count");
    if (i > j) std::swap(i, j);
    // row i occupies (vertex_count - 1) + ... starting offsets; standard
    // upper-triangular packing with 1-based vertices.
    size_t row = static_cast<size_t>(i - 1);
    size_t before = row * vertex_count - row * (row + 1) / 2;
    return before + static_cast<size_t>(j - i - 1);
}

EdgeColoring difference_coloring(const Coloring& chi) {
    if (chi.lo != 1) throw std::invalid_argument("difference_coloring: coloring must start at 1");
    int n = chi.size();
    EdgeColoring ec = EdgeColoring::complete(n + 1, chi.num_colors);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) ec.set(i, j, chi.at(j - i));
    return ec;
}

TriangleCensus triangle_census(const EdgeColoring& ec) {
    TriangleCensus out;
    int n = ec.vertex_count;
    out.total = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int cij = ec.at(i, j);
            for (int k = j + 1; k <= n; ++k) {
                int cjk = ec.at(j, k), cik = ec.at(i, k);
                if (cij == cjk && cjk == cik)
                    ++out.mono;
                else if (cij != cjk && cjk != cik && cij != cik)
                    ++out.rainbow;
            }
        }
    return out;
}

TriangleCensus triangle_census_by_identity(const EdgeColoring& ec) {
    TriangleCensus out;
    const int n = ec.vertex_count;
    out.total = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    // Mono: count triangles inside each color class with adjacency bitsets.
    const int words = (n + 64) / 64;
    std::vector<std::uint64_t> adj(static_cast<size_t>(n + 1) * words);
    for (int c = 0; c < ec.num_colors; ++c) {
        std::fill(adj.begin(), adj.end(), 0);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (ec.at(i, j) == c) {
                    adj[static_cast<size_t>(i) * words + j / 64] |= 1ULL << (j % 64);
                    adj[static_cast<size_t>(j) * words + i / 64] |= 1ULL << (i % 64);
                }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (ec.at(i, j) != c) continue;
                long long common = 0;
                for (int w = 0; w < words; ++w) {
                    std::uint64_t inter = adj[static_cast<size_t>(i) * words + w] &
                                          adj[static_cast<size_t>(j) * words + w];
                    common += std::popcount(inter);
                }
                out.mono += common;
            }
    }
    out.mono /= 3;  // each mono triangle counted once per edge
    // Rainbow from the per-vertex color-degree pair count.
    long long pair_sum = 0;
    std::vector<long long> deg(static_cast<size_t>(ec.num_colors), 0);
    for (int v = 1; v <= n; ++v) {
        std::fill(deg.begin(), deg.end(), 0);
        for (int u = 1; u <= n; ++u)
            if (u != v) ++deg[ec.at(v, u)];
        for (long long d : deg) pair_sum += d * (d - 1) / 2;
    }
    out.rainbow = out.total + 2 * out.mono - pair_sum;
    return out;
}

bool correspondence_check(const Coloring& chi, int cap) {
    if (chi.size() > cap) throw std::invalid_argument("correspondence_check: size cap exceeded");
    TriangleCensus tc = triangle_census(difference_coloring(chi));
    long long weighted = 0;
    const long long n = chi.size();
    for (long long x = 1; x <= n; ++x)
        for (long long y = x; x + y <= n; ++y) {
            long long z = x + y;
            TripleClass cls = classify(chi, x, y, z);
            if (cls == TripleClass::Neither) continue;
            weighted += (n + 1 - z) * (x < y ? 2 : 1);
        }
    return weighted == tc.mono + tc.rainbow;
}

long long g33(int r) {
    if (r < 3) throw std::invalid_argument("g33: r >= 3 required");
    long long p = 1;
    for (int i = 0; i < r / 2; ++i) p *= 5;
    return (r % 2 == 0) ? p + 1 : 2 * p + 1;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

namespace {

long long choose3_checked(long long n) {
    if (n < 3) return 0;
    return n * (n - 1) * (n - 2) / 6;
}

}  // namespace

Rational triangle_count_lower_bound(int k, int l, int r, long long s, long long n) {
    if (k != 3 || l != 3)
        throw std::invalid_argument("triangle_count_lower_bound: only (k, l) = (3, 3) supported");
    long long g = g33(r);
    if (n < g) throw std::invalid_argument("triangle_count_lower_bound: n < G(3,3;r)");
    return Rational(s * choose3_checked(n), choose3_checked(g));
}

BaselineStats random_baseline(int n, int r, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("random_baseline: trials >= 1 required");
    BaselineStats st;
    st.n = n;
    st.r = r;
    st.trials = trials;
    st.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, r - 1);
    long double sm = 0, sm2 = 0, sr = 0, sr2 = 0;
    EdgeColoring ec = EdgeColoring::complete(n, r);
    for (int t = 0; t < trials; ++t) {
        for (auto& c : ec.colors) c = pick(rng);
        TriangleCensus tc = triangle_census(ec);
        sm += tc.mono;
        sm2 += static_cast<long double>(tc.mono) * tc.mono;
        sr += tc.rainbow;
        sr2 += static_cast<long double>(tc.rainbow) * tc.rainbow;
    }
    st.mono_mean = static_cast<double>(sm / trials);
    st.rainbow_mean = static_cast<double>(sr / trials);
    st.mono_sd = static_cast<double>(std::sqrt(std::max<long double>(0, sm2 / trials - (sm / trials) * (sm / trials))));
    st.rainbow_sd = static_cast<double>(std::sqrt(std::max<long double>(0, sr2 / trials - (sr / trials) * (sr / trials))));
    return st;
}

StrictTripleResult find_strict_triple_via_graph(const Coloring& chi, int terms) {
    std::vector<long long> labels = stanley_sequence(terms);
    if (chi.lo != 1 || chi.hi() < labels.back())
        throw std::invalid_argument("find_strict_triple_via_graph: coloring must cover [1, a_terms]");
    StrictTripleResult res;
    for (int i = 0; i < terms; ++i)
        for (int j = i + 1; j < terms; ++j) {
            int cij = chi.at(labels[j] - labels[i]);
            for (int k = j + 1; k < terms; ++k) {
                int cjk = chi.at(labels[k] - labels[j]);
                int cik = chi.at(labels[k] - labels[i]);
                bool mono = cij == cjk && cjk == cik;
                bool rain = cij != cjk && cjk != cik && cij != cik;
                if (!mono && !rain) continue;
                long long d1 = labels[j] - labels[i];
                long long d2 = labels[k] - labels[j];
                res.found = true;
                res.x = std::min(d1, d2);
                res.y = std::max(d1, d2);
                res.z = labels[k] - labels[i];
                res.cls = classify(chi, res.x, res.y, res.z);
                return res;
            }
        }
    return res;
}

}  // namespace gs
