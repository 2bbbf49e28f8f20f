#pragma once

#include "sgc/arith.hpp"
#include "sgc/coloring.hpp"
#include "sgc/sgraph.hpp"

#include <optional>
#include <vector>

namespace sgc {

/// Exact search for a (k,d)-coloring. Depth-first over vertices in
/// decreasing-degree order, lowest color first, with forward pruning of the
/// neighbors' candidate sets. Requires k >= 2d >= 2.
std::optional<KDColoring> feasible(const SignedGraph& g, Int k, Int d);

// Exhaustive enumeration of all k^n maps; refuses (Error) when k^n > 1e8.
std::optional<KDColoring> brute_force_feasible(const SignedGraph& g, Int k, Int d);
inline constexpr Int brute_force_limit = 100'000'000;

struct ChiResult {
    Int value;
    KDColoring witness; // a (value,1)-coloring
};

struct ChiCResult {
    Ratio value;
    KDColoring witness; // witness.ratio() == value, witness.k() <= 4n
};

// Least k >= 2 admitting a (k,1)-coloring.
ChiResult chi(const SignedGraph& g);

/// Minimum k/d over feasible (k,d) with 2d <= k <= 4n. Candidates are
/// confined to [chi-1, chi] and tried by ascending ratio, then ascending k,
/// so the witness is the smallest modulus attaining the minimum.
ChiCResult chi_c(const SignedGraph& g);
ChiCResult chi_c(const SignedGraph& g, Int chi_value);

// The signed color set M_m: {0, +-1, ..., +-j} for m = 2j+1, {+-1, ..., +-j} for m = 2j.
std::vector<Int> signed_color_set(Int m);
// A map into M_m with c(v) != sign(e) c(w) on every edge, if one exists.
std::optional<std::vector<Int>> pm_coloring(const SignedGraph& g, Int m);
std::optional<std::vector<Int>> brute_force_pm_coloring(const SignedGraph& g, Int m);
bool is_pm_coloring(const SignedGraph& g, Int m, const std::vector<Int>& colors);
// Least m with an M_m-coloring.
Int chi_pm(const SignedGraph& g);

struct InvariantReport {
    int order = 0;
    std::size_t edges = 0;
    bool edgeless_convention = false; // chi = chi_c = 2 by the k >= 2d convention
    ChiResult chi;
    ChiCResult chi_c;
    Int chi_pm = 0;
    std::vector<Int> pm_witness;

    bool bounds_ok = false;    // chi - 1 <= chi_c <= chi
    bool gap_ok = false;       // chi_c = chi - 1, or chi_c >= (chi-1)(1 + 1/(4n-1))
    bool charac_ok = false;    // (chi_c = chi - 1) iff a (2(chi-1), 2)-coloring exists
    bool pm_ok = false;        // |chi_pm - chi| <= 1
    bool witness_ok = false;   // chi_c witness has k <= 4n

    bool all_ok() const { return bounds_ok && gap_ok && charac_ok && pm_ok && witness_ok; }
};

InvariantReport report(const SignedGraph& g);

} // namespace sgc
