#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// arithmetic or verification code paths; they re-derive the definitions
// directly so they can be used to check them.

#include "sgc/coloring.hpp"
#include "sgc/sgraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace sgc::testing {

using BigInt = boost::multiprecision::cpp_int;

// |x|_k by scanning every multiple of k within one period either side.
inline std::int64_t naive_circ_dist(std::int64_t x, std::int64_t k)
{
    std::int64_t best = -1;
    for (std::int64_t q = -(x / k) - 2; q <= -(x / k) + 2; ++q) {
        std::int64_t v = x + q * k;
        std::int64_t a = v < 0 ? -v : v;
        if (best < 0 || a < best) best = a;
    }
    return best;
}

// Definition of a (k,d)-coloring, edge by edge.
inline bool naive_kd_valid(const SignedGraph& g, std::int64_t k, std::int64_t d, const std::vector<std::int64_t>& c)
{
    if (c.size() != static_cast<std::size_t>(g.order())) return false;
    for (auto x : c)
        if (x < 0 || x >= k) return false;
    for (const auto& e : g.edges())
        if (naive_circ_dist(c[e.u] - e.sign * c[e.v], k) < d) return false;
    return true;
}

// [x]_r for rationals x = xn/xd, r = rn/rd: smallest non-negative x - q r,
// found by walking q. Returns (num, den) unreduced as BigInts.
struct BigRatio {
    BigInt num;
    BigInt den;
};

inline BigRatio naive_mod(BigInt xn, BigInt xd, BigInt rn, BigInt rd)
{
    // x - q r = (xn rd - q rn xd) / (xd rd)
    BigInt den = xd * rd;
    BigInt num = xn * rd;
    BigInt step = rn * xd;
    while (num < 0) num += step;
    while (num >= step) num -= step;
    return {num, den};
}

// Definition of a circular r-coloring, with every rational widened to BigInt.
inline bool naive_r_valid(const SignedGraph& g, const RColoring& f)
{
    if (f.size() != static_cast<std::size_t>(g.order())) return false;
    const BigInt rn = f.r().num(), rd = f.r().den();
    for (const auto& e : g.edges()) {
        const auto& a = f.colors()[e.u];
        const auto& b = f.colors()[e.v];
        // a - s b as a fraction over a.den * b.den
        BigInt xn = BigInt(a.num()) * b.den() - BigInt(e.sign) * b.num() * a.den();
        BigInt xd = BigInt(a.den()) * b.den();
        auto up = naive_mod(xn, xd, rn, rd);
        auto down = naive_mod(-xn, xd, rn, rd);
        // min(up, down) >= 1 <=> both >= 1
        if (up.num < up.den || down.num < down.den) return false;
    }
    return true;
}

inline bool big_equal(const BigRatio& a, std::int64_t n, std::int64_t d) { return a.num * d == BigInt(n) * a.den; }

// Potential-free balance oracle: enumerate all 2^n switchings and look for
// one that makes every edge positive.
inline bool naive_balanced(const SignedGraph& g)
{
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            int flip = ((mask >> e.u) & 1) ^ ((mask >> e.v) & 1);
            if ((flip ? -e.sign : e.sign) < 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

struct Planted {
    SignedGraph graph;
    KDColoring coloring;
};

/// A random graph on n vertices built around a random coloring in Z_k: every
/// pair/sign combination the coloring permits becomes an edge with
/// probability `density`. The coloring is valid by construction.
inline Planted planted_instance(std::mt19937_64& rng, int n, std::int64_t k, std::int64_t d, double density)
{
    std::uniform_int_distribution<std::int64_t> color(0, k - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::int64_t> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = color(rng);
    std::vector<SignedEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> ok;
            for (int s : {1, -1})
                if (naive_circ_dist(c[u] - s * c[v], k) >= d) ok.push_back(s);
            if (ok.empty() || unit(rng) >= density) continue;
            es.push_back({u, v, ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)]});
        }
    return {SignedGraph(n, std::move(es)), KDColoring(k, d, std::move(c))};
}

// One update step at x0 straight from the definition, without any gate.
inline std::vector<std::int64_t> naive_update(const std::vector<std::int64_t>& colors, std::int64_t k, std::int64_t d,
                                              std::int64_t x0)
{
    const auto up = ((x0 + d) % k + k) % k;
    const auto down = ((k - x0 - d) % k + k) % k;
    std::vector<std::int64_t> out = colors;
    for (auto& c : out) {
        if (c == up)
            c = ((up - 1) % k + k) % k;
        else if (c == down)
            c = (down + 1) % k;
    }
    return out;
}

// When updating at x0 is sound: x0 and -x0 unused, and if x0 is one of the
// points (k-2d+1)/2, (k-d+1)/2, (2k-d+1)/2 (mod k) that are integers, also
// x0+d and -x0-d unused. With d = 1 the latter two must be unused always.
inline bool naive_update_gate(const std::vector<std::int64_t>& colors, std::int64_t k, std::int64_t d, std::int64_t x0)
{
    auto used = [&](std::int64_t x) {
        x = ((x % k) + k) % k;
        for (auto c : colors)
            if (c == x) return true;
        return false;
    };
    if (used(x0) || used(-x0)) return false;
    bool special = false;
    for (std::int64_t twice : {k - 2 * d + 1, k - d + 1, 2 * k - d + 1})
        if (twice % 2 == 0 && ((twice / 2) % k + k) % k == x0) special = true;
    return !(special || d == 1) || (!used(x0 + d) && !used(-x0 - d));
}

inline std::int64_t random_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// Random coprime (k, d) with 2d <= k and k in [lo, hi].
inline std::pair<std::int64_t, std::int64_t> coprime_pair(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    for (;;) {
        auto k = random_in(rng, lo, hi);
        auto d = random_in(rng, 1, k / 2);
        if (gcd64(k, d) == 1) return {k, d};
    }
}

} // namespace sgc::testing
