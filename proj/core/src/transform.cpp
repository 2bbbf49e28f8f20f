#include "sgc/transform.hpp"

#include "sgc/errors.hpp"
#include "sgc/solve.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace sgc {

namespace {

std::string kd_name(Int k, Int d) { return "(" + std::to_string(k) + "," + std::to_string(d) + ")"; }

void require_valid(const SignedGraph& g, const KDColoring& c, const char* op)
{
    if (c.size() != static_cast<std::size_t>(g.order()))
        throw PreconditionError(op, "coloring does not cover the vertices of the graph");
    if (!is_valid(g, c)) throw PreconditionError(op, "input is not a valid " + kd_name(c.k(), c.d()) + "-coloring");
}

KDColoring checked(const SignedGraph& g, KDColoring out, const char* op)
{
    auto bad = verify_kd(g, out);
    if (!bad.empty()) {
        const auto& e = bad.front().edge;
        throw InternalError(std::string(op) + ": produced an invalid " + kd_name(out.k(), out.d()) + "-coloring (edge " +
                            std::to_string(e.u) + "-" + std::to_string(e.v) + ")");
    }
    return out;
}

// Wraps constructor failures of a computed coloring as internal errors.
KDColoring make_output(Int k, Int d, std::vector<Int> colors, const char* op)
{
    try {
        return KDColoring(k, d, std::move(colors));
    }
    catch (const Error& e) {
        throw InternalError(std::string(op) + ": computed parameters are inconsistent: " + e.what());
    }
}

// Number of elements of `removed` (sorted flags over Z_k) strictly below x.
std::vector<Int> prefix_counts(const std::vector<char>& removed)
{
    std::vector<Int> below(removed.size() + 1, 0);
    for (std::size_t i = 0; i < removed.size(); ++i) below[i + 1] = below[i] + (removed[i] ? 1 : 0);
    return below;
}

// Delete the inverse pair {x, k-x} from Z_k and close the gap. Used by
// descend when d = 1, where the exception points degenerate onto 0.
KDColoring drop_inverse_pair(const SignedGraph& g, const KDColoring& c)
{
    const Int k = c.k();
    auto used = c.used();
    Int x = -1;
    for (Int y = 1; 2 * y < k; ++y)
        if (!used[y] && !used[k - y]) {
            x = y;
            break;
        }
    if (x < 0) throw InternalError("descend: no free inverse pair although k > 4n");
    std::vector<Int> out;
    out.reserve(c.size());
    for (Int col : c.colors()) out.push_back(col - (col > x ? 1 : 0) - (col > k - x ? 1 : 0));
    return checked(g, make_output(k - 2, 1, std::move(out), "descend"), "descend");
}

// Smallest k' <= 4n (then smallest d') with k'/d' < k/d admitting a coloring.
// Such a pair exists whenever a (k,d)-coloring with k > 4n does.
KDColoring search_below(const SignedGraph& g, const KDColoring& c)
{
    const Int limit = std::min<Int>(4 * static_cast<Int>(g.order()), c.k() - 1);
    for (Int k = 2; k <= limit; ++k)
        for (Int d = 1; 2 * d <= k; ++d)
            if (Ratio(k, d) < c.ratio())
                if (auto found = feasible(g, k, d)) return checked(g, std::move(*found), "descend");
    throw InternalError("descend: no smaller (k',d') with k' <= 4n exists");
}

} // namespace

std::vector<Int> exception_points(Int k, Int d)
{
    if (k <= 0 || d <= 0) throw InvalidModulus("exception_points needs positive k and d");
    std::vector<Int> out;
    for (Int twice : {k - 2 * d + 1, k - d + 1, 2 * k - d + 1})
        if (twice % 2 == 0) out.push_back(mod_rem(twice / 2, k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

KDColoring scale(const SignedGraph& g, const KDColoring& c, Int t)
{
    if (t < 1) throw PreconditionError("scale", "t >= 1");
    require_valid(g, c, "scale");
    std::vector<Int> out;
    out.reserve(c.size());
    for (Int col : c.colors()) out.push_back(checked_mul(t, col));
    return checked(g, KDColoring(checked_mul(t, c.k()), checked_mul(t, c.d()), std::move(out)), "scale");
}

KDColoring extend(const SignedGraph& g, const KDColoring& c, Int k_new)
{
    if (k_new <= c.k()) throw PreconditionError("extend", "k_new > k");
    require_valid(g, c, "extend");
    const Int half = c.k() / 2;
    const Int shift = k_new - c.k();
    std::vector<Int> out;
    out.reserve(c.size());
    for (Int col : c.colors()) out.push_back(col <= half ? col : col + shift);
    return checked(g, KDColoring(k_new, c.d(), std::move(out)), "extend");
}

KDColoring update_once(const SignedGraph& g, const KDColoring& c, Int x0)
{
    const Int k = c.k(), d = c.d();
    if (x0 < 0 || x0 >= k) throw PreconditionError("update", "x0 in Z_k");
    require_valid(g, c, "update");
    auto used = c.used();
    const Int inv = mod_rem(k - x0, k);
    const Int up = mod_rem(x0 + d, k);      // recolored one step down
    const Int down = mod_rem(k - x0 - d, k); // recolored one step up
    if (used[x0]) throw PreconditionError("update", "color x0=" + std::to_string(x0) + " is unused");
    if (used[inv]) throw PreconditionError("update", "color [k-x0]_k=" + std::to_string(inv) + " is unused");
    // With d = 1 a recolored [x0+1]_k lands on x0 itself.
    if (d == 1 && (used[up] || used[down]))
        throw PreconditionError("update", "d = 1, so [x0+1]_k and [k-x0-1]_k must both be unused");
    auto pts = exception_points(k, d);
    if (std::find(pts.begin(), pts.end(), x0) != pts.end() && (used[up] || used[down]))
        throw PreconditionError("update", "x0=" + std::to_string(x0) +
                                              " lies in P(k,d), so [x0+d]_k and [k-x0-d]_k must both be unused");

    std::vector<Int> out = c.colors();
    for (Int& col : out) {
        if (col == up)
            col = mod_rem(up - 1, k);
        else if (col == down)
            col = mod_rem(down + 1, k);
    }
    KDColoring result = checked(g, KDColoring(k, d, std::move(out)), "update");
    auto now = result.used();
    if (now[x0] || now[inv] || now[up] || now[down])
        throw InternalError("update: a color that must be freed is still in use");
    return result;
}

KDColoring update_steps(const SignedGraph& g, const KDColoring& c, Int x0, Int steps)
{
    if (steps < 0) throw PreconditionError("update", "steps >= 0");
    if (x0 < 0 || x0 >= c.k()) throw PreconditionError("update", "x0 in Z_k");
    require_valid(g, c, "update");
    KDColoring cur = c;
    Int x = x0;
    for (Int i = 0; i < steps; ++i) {
        try {
            cur = update_once(g, cur, x);
        }
        catch (const PreconditionError& e) {
            throw PreconditionError("update", "step " + std::to_string(i) + ": " + e.clause());
        }
        x = mod_rem(x + c.d(), c.k());
    }
    return cur;
}

KDColoring reduce_t(const SignedGraph& g, const KDColoring& c, Int k, Int d, Int t)
{
    if (k < 1 || d < 1) throw PreconditionError("reduce-t", "k, d >= 1");
    if (gcd(k, d) != 1) throw PreconditionError("reduce-t", "gcd(k,d) = 1");
    if (t < 3) throw PreconditionError("reduce-t", "t >= 3");
    if (c.k() != checked_mul(t, k) || c.d() != checked_mul(t, d))
        throw PreconditionError("reduce-t", "coloring parameters equal (tk,td) = " + kd_name(t * k, t * d));
    require_valid(g, c, "reduce-t");

    const Int big = c.k();
    std::vector<char> removed(static_cast<std::size_t>(big), 0);
    for (Int x = 0; x < big; ++x) removed[x] = (x % t == 1 || x % t == t - 1) ? 1 : 0;
    auto below = prefix_counts(removed);

    const Int k_new = big - 2 * k;
    std::vector<Int> out;
    out.reserve(c.size());
    for (Int col : c.colors()) {
        if (col % t == 1)
            col -= 1;
        else if (col % t == t - 1)
            col = mod_rem(col + 1, big);
        out.push_back(mod_rem(col - below[col], k_new));
    }
    return checked(g, make_output(k_new, c.d() - 2 * d, std::move(out), "reduce-t"), "reduce-t");
}

KDColoring halve(const SignedGraph& g, const KDColoring& c)
{
    if (c.k() % 2 != 0 || c.d() % 2 != 0) throw PreconditionError("halve", "coloring parameters are (2k,2d)");
    const Int k = c.k() / 2, d = c.d() / 2;
    if (gcd(k, d) != 1) throw PreconditionError("halve", "gcd(k,d) = 1");
    if (k <= 2 * static_cast<Int>(g.order())) throw PreconditionError("halve", "k > 2n");
    require_valid(g, c, "halve");

    auto used = c.used();
    Int x0 = -1;
    for (Int x = 1; x < c.k(); x += 2)
        if (!used[x] && !used[c.k() - x]) {
            x0 = x;
            break;
        }
    if (x0 < 0) throw InternalError("halve: no odd color with a free inverse although k > 2n");

    KDColoring even = update_steps(g, c, x0, k);
    std::vector<Int> out;
    out.reserve(even.size());
    for (Int col : even.colors()) {
        if (col % 2 != 0) throw InternalError("halve: odd color survived the k-step update");
        out.push_back(col / 2);
    }
    return checked(g, KDColoring(k, d, std::move(out)), "halve");
}

KDColoring descend(const SignedGraph& g, const KDColoring& c) { return descend_traced(g, c).coloring; }

const char* to_string(DescendRoute route)
{
    switch (route) {
    case DescendRoute::drop_pair: return "drop-pair";
    case DescendRoute::case_1a: return "case-1a";
    case DescendRoute::case_1b: return "case-1b";
    case DescendRoute::case_2a: return "case-2a";
    case DescendRoute::case_2b: return "case-2b";
    case DescendRoute::search: return "search";
    }
    return "?";
}

DescendResult descend_traced(const SignedGraph& g, const KDColoring& c)
{
    const Int k = c.k(), d = c.d();
    if (gcd(k, d) != 1) throw PreconditionError("descend", "gcd(k,d) = 1");
    if (k <= 4 * static_cast<Int>(g.order())) throw PreconditionError("descend", "k > 4n");
    require_valid(g, c, "descend");
    if (d == 1) return {drop_inverse_pair(g, c), DescendRoute::drop_pair};

    // The two exception points, labelled as in the case analysis below.
    Int p, q;
    if (k % 2 == 0) {
        p = (k - d + 1) / 2;
        q = (2 * k - d + 1) / 2;
    }
    else {
        p = (k - 2 * d + 1) / 2;
        q = d % 2 == 0 ? (k - d + 1) / 2 : (2 * k - d + 1) / 2;
    }

    // f(x) is the number of d-steps from 0 to x.
    const Int dinv = mod_inverse(d, k);
    auto f = [&](Int x) { return mod_rem(checked_mul(x, dinv), k); };
    auto f_inv = [&](Int y) { return mod_rem(checked_mul(y, d), k); };

    // First free inverse pair met walking clockwise (in f-order) from f(q) to f(p).
    auto used = c.used();
    Int x0 = -1;
    for (Int y = mod_rem(f(q) + 1, k);; y = mod_rem(y + 1, k)) {
        Int x = f_inv(y);
        if (!used[x] && !used[mod_rem(-x, k)]) {
            x0 = x;
            break;
        }
        if (y == f(p)) break;
    }
    if (x0 < 0) return {search_below(g, c), DescendRoute::search};

    KDColoring c1 = update_steps(g, c, x0, mod_rem(f(p) - f(x0), k));
    {
        auto u1 = c1.used();
        if (u1[p] || u1[k - p]) throw InternalError("descend: p or k-p still used after the first update");
    }

    const Int start = k - p;
    Int r = 0;
    for (Int i = 1; i <= k; ++i) {
        Int x = mod_rem(start + i * d, k);
        if (x == p || x == q) {
            r = i;
            break;
        }
    }
    const bool hits_p = mod_rem(start + r * d, k) == p;
    {
        // The walk may only start on an exception point when both recolored
        // classes are empty there.
        auto pts = exception_points(k, d);
        auto u1 = c1.used();
        if (std::find(pts.begin(), pts.end(), start) != pts.end() && (u1[mod_rem(start + d, k)] || u1[mod_rem(-start - d, k)]))
            return {search_below(g, c), DescendRoute::search};
    }
    KDColoring c2 = update_steps(g, c1, start, r);

    std::vector<char> in_a(static_cast<std::size_t>(k), 0), in_ab(static_cast<std::size_t>(k), 0);
    Int a_size = 0;
    for (Int i = 0; i <= r; ++i) {
        Int x = mod_rem(start + i * d, k);
        if (!in_a[x]) ++a_size;
        in_a[x] = 1;
        in_ab[x] = 1;
        in_ab[mod_rem(-x, k)] = 1;
    }
    if (a_size != r + 1) throw InternalError("descend: the update path revisits a color");
    {
        auto u2 = c2.used();
        for (Int x = 0; x < k; ++x)
            if (u2[x] && in_ab[x]) throw InternalError("descend: a deleted color is still in use");
    }
    const auto below_a = prefix_counts(in_a);
    const auto below_ab = prefix_counts(in_ab);
    const Int half = k / 2;

    Int k_new = 0, shrink_num = 0;
    std::function<Int(Int)> rename;
    DescendRoute route;
    if (k % 2 == 0 && hits_p) {
        route = DescendRoute::case_1a;
        k_new = k - r - 1;
        shrink_num = r * d + d - 1;
        const Int offset = in_a[0] ? (k - a_size) / 2 : 0;
        rename = [&, offset](Int x) { return x - below_a[x] - offset; };
    }
    else if (k % 2 == 0) {
        route = DescendRoute::case_1b;
        k_new = k - 2 * (r + 1);
        shrink_num = 2 * r * d + 2 * d - 2;
        rename = [&](Int x) { return x - below_ab[x]; };
    }
    else if (hits_p) {
        route = DescendRoute::case_2a;
        k_new = k - r - 2;
        shrink_num = r * d + 2 * d - 1;
        if (!in_a[0]) {
            rename = [&](Int x) { return x - below_a[x] - (x > half ? 1 : 0); };
        }
        else {
            if ((k - a_size) % 2 != 0) throw InternalError("descend: odd number of surviving colors in case 2.a");
            const Int offset = (k - a_size) / 2;
            rename = [&, offset](Int x) { return x - below_a[x] - offset + (x > half ? 0 : 1); };
        }
    }
    else {
        route = DescendRoute::case_2b;
        k_new = k - 2 * r - 3;
        shrink_num = 2 * r * d + 3 * d - 2;
        rename = [&](Int x) { return x - below_ab[x] - (x > half ? 1 : 0); };
    }
    if (shrink_num % k != 0)
        throw InternalError("descend: non-integral distance loss " + std::to_string(shrink_num) + "/" + std::to_string(k));
    const Int d_new = d - shrink_num / k;
    if (k_new < 1) throw InternalError("descend: non-positive target modulus");

    std::vector<Int> out;
    out.reserve(c2.size());
    for (Int col : c2.colors()) out.push_back(mod_rem(rename(col), k_new));
    KDColoring result = checked(g, make_output(k_new, d_new, std::move(out), "descend"), "descend");
    if (!(result.k() < k) || !(result.ratio() < c.ratio()))
        throw InternalError("descend: target " + kd_name(result.k(), result.d()) + " does not improve on " + kd_name(k, d));
    return {std::move(result), route};
}

KDColoring retarget(const SignedGraph& g, const KDColoring& c, Int k_new, Int d_new)
{
    if (d_new < 1 || k_new < 2 * d_new) throw PreconditionError("retarget", "2d' <= k' with d' >= 1");
    const Int d = c.d();
    const Ratio from = c.ratio(), to(k_new, d_new);
    if (to < from) throw PreconditionError("retarget", "k/d <= k'/d'");
    if (to == from && d % 2 == 0) throw PreconditionError("retarget", "equal ratios need d odd");
    require_valid(g, c, "retarget");

    // Work with the reduced target a/b and scale back at the end.
    const Int common = gcd(k_new, d_new);
    const Int a = k_new / common, b = d_new / common;
    KDColoring cur = scale(g, c, b); // (kb, db)

    if (d % 2 == 1) {
        if (checked_mul(a, d) > cur.k()) cur = extend(g, cur, a * d); // (ad, bd)
        for (Int t = d; t >= 3; t -= 2) cur = reduce_t(g, cur, a, b, t);
    }
    else {
        const Int m = checked_mul(a, d) - 1;
        if (m > cur.k()) cur = extend(g, cur, m); // (ad - 1, bd)
        std::vector<Int> out;
        out.reserve(cur.size());
        for (Int col : cur.colors()) {
            Int x = col > m - d / 2 ? col - m : col;
            out.push_back(floor_div(2 * x + d, 2 * d));
        }
        cur = checked(g, make_output(a, b, std::move(out), "retarget"), "retarget");
    }
    if (common > 1) cur = scale(g, cur, common);
    if (cur.k() != k_new || cur.d() != d_new) throw InternalError("retarget: landed on the wrong parameters");
    return cur;
}

RColoring kd_to_r(const SignedGraph& g, const KDColoring& c)
{
    require_valid(g, c, "kd2r");
    std::vector<Ratio> out;
    out.reserve(c.size());
    for (Int col : c.colors()) out.emplace_back(col, c.d());
    RColoring f(Ratio(c.k(), c.d()), std::move(out));
    if (!is_valid(g, f)) throw InternalError("kd2r: produced an invalid r-coloring");
    return f;
}

KDColoring r_to_kd(const SignedGraph& g, const RColoring& f)
{
    if (f.size() != static_cast<std::size_t>(g.order()))
        throw PreconditionError("r2kd", "coloring does not cover the vertices of the graph");
    if (!is_valid(g, f)) throw PreconditionError("r2kd", "input is not a valid circular " + f.r().to_string() + "-coloring");
    const Int k = f.r().num(), d = f.r().den();
    Int m = 1;
    for (const auto& col : f.colors()) m = lcm(m, col.den());

    std::vector<Int> out;
    out.reserve(f.size());
    for (const auto& col : f.colors()) {
        Ratio scaled = col * Ratio(checked_mul(m, d));
        out.push_back(scaled.num());
    }
    KDColoring cur = checked(g, KDColoring(checked_mul(m, k), checked_mul(m, d), std::move(out)), "r2kd");
    for (Int t = m; t >= 3; t -= 2) cur = reduce_t(g, cur, k, d, t);
    return cur;
}

} // namespace sgc
