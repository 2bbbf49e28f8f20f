#pragma once

#include "sgc/arith.hpp"
#include "sgc/sgraph.hpp"

#include <vector>

namespace sgc {

/// A map V -> Z_k together with the distance parameter d (2d <= k).
/// Validity against a graph is a separate question; see verify_kd.
class KDColoring {
public:
    KDColoring(Int k, Int d, std::vector<Int> colors);

    Int k() const noexcept { return k_; }
    Int d() const noexcept { return d_; }
    const std::vector<Int>& colors() const noexcept { return colors_; }
    Int operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
    std::size_t size() const noexcept { return colors_.size(); }

    Ratio ratio() const { return Ratio(k_, d_); }
    // Per-color usage flags, indexed 0..k-1.
    std::vector<char> used() const;

    friend bool operator==(const KDColoring&, const KDColoring&) = default;

private:
    Int k_;
    Int d_;
    std::vector<Int> colors_;
};

/// A map V -> [0, r) with rational values; r >= 2.
class RColoring {
public:
    RColoring(Ratio r, std::vector<Ratio> colors);

    const Ratio& r() const noexcept { return r_; }
    const std::vector<Ratio>& colors() const noexcept { return colors_; }
    std::size_t size() const noexcept { return colors_.size(); }

    friend bool operator==(const RColoring&, const RColoring&) = default;

private:
    Ratio r_;
    std::vector<Ratio> colors_;
};

struct Violation {
    SignedEdge edge;
    Ratio distance; // measured, always < required
    Ratio required;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// All edges e = vw with |c(v) - sign(e) c(w)|_k < d. Throws GraphMismatch
// when the coloring does not cover exactly the vertices of g.
std::vector<Violation> verify_kd(const SignedGraph& g, const KDColoring& c);
// Positive edges need |f(x) - f(y)|_r >= 1, negative edges |f(x) + f(y)|_r >= 1.
std::vector<Violation> verify_r(const SignedGraph& g, const RColoring& f);

bool is_valid(const SignedGraph& g, const KDColoring& c);
bool is_valid(const SignedGraph& g, const RColoring& f);

// Every x in Z_k with both x and [k - x]_k unused, ascending.
std::vector<Int> missing_inverse_pairs(const KDColoring& c);

} // namespace sgc
