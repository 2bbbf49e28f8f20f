#pragma once

#include "sgc/coloring.hpp"
#include "sgc/sgraph.hpp"

#include <vector>

namespace sgc {

// Constructive recolorings between (k,d)- and r-colorings.
//
// Every operation takes the graph the coloring belongs to, requires the
// input to be valid on it (PreconditionError otherwise), and re-verifies its
// own output before returning; a failed re-verification raises InternalError.

/// The half-integer exception points {(k-2d+1)/2, (k-d+1)/2, (2k-d+1)/2}
/// that are integers, reduced into Z_k. Empty iff k and d are both even.
std::vector<Int> exception_points(Int k, Int d);

// (k,d) -> (tk,td) by c'(v) = t c(v).
KDColoring scale(const SignedGraph& g, const KDColoring& c, Int t);

// (k,d) -> (k_new,d): colors above floor(k/2) move up by k_new - k.
KDColoring extend(const SignedGraph& g, const KDColoring& c, Int k_new);

/// Update at x0: colors [x0+d]_k -> [x0+d-1]_k and [k-x0-d]_k -> [k-x0-d+1]_k,
/// simultaneously. Requires x0 and [k-x0]_k unused, and either
/// x0 outside exception_points(k,d) or both recolored classes empty.
/// Afterwards x0, [x0+d]_k, [k-x0]_k and [k-x0-d]_k are all unused.
KDColoring update_once(const SignedGraph& g, const KDColoring& c, Int x0);

// Update at x0, [x0+d]_k, ..., [x0+(steps-1)d]_k in order.
KDColoring update_steps(const SignedGraph& g, const KDColoring& c, Int x0, Int steps);

/// (tk,td) -> (tk-2k, td-2d) for gcd(k,d) = 1 and t >= 3: push the
/// residue classes 1 and t-1 (mod t) into class 0, then delete them.
KDColoring reduce_t(const SignedGraph& g, const KDColoring& c, Int k, Int d, Int t);

/// (2k,2d) -> (k,d) for gcd(k,d) = 1 and k > 2n: clear every odd color by a
/// k-step update from an odd x0 whose inverse is also free, then halve.
KDColoring halve(const SignedGraph& g, const KDColoring& c);

/// (k,d) -> (k',d') with k' < k and k'/d' < k/d, for gcd(k,d) = 1 and k > 4n.
///
/// For d >= 2 this frees the exception point p and its inverse by updating
/// along the d-step order, frees a run A from k-p to the next exception
/// point, then deletes A (or A and its inverses) and renames. Two boundary
/// configurations admit no admissible start for that walk: k = 4n+1 with every
/// free inverse pair on the wrong side of p, and k = 3d-2 where k-p is itself
/// an exception point with a blocked neighbor. Those fall back to an exact
/// search over k' <= 4n. For d = 1 a free inverse pair is deleted directly.
KDColoring descend(const SignedGraph& g, const KDColoring& c);

enum class DescendRoute { drop_pair, case_1a, case_1b, case_2a, case_2b, search };

struct DescendResult {
    KDColoring coloring;
    DescendRoute route;
};

DescendResult descend_traced(const SignedGraph& g, const KDColoring& c);
const char* to_string(DescendRoute route);

/// (k,d) -> (k',d') whenever k/d < k'/d', or k/d = k'/d' with d odd.
KDColoring retarget(const SignedGraph& g, const KDColoring& c, Int k_new, Int d_new);

// f(v) = c(v) / D on the circle of circumference K/D.
RColoring kd_to_r(const SignedGraph& g, const KDColoring& c);

/// r = k/d in lowest terms; with m the least common denominator of the
/// colors, f m d is an (mk,md)-coloring, pulled down by reduce_t to (2k,2d)
/// when m is even and to (k,d) when m is odd.
KDColoring r_to_kd(const SignedGraph& g, const RColoring& f);

} // namespace sgc
