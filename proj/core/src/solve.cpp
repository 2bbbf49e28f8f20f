#include "sgc/solve.hpp"

#include "sgc/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>

namespace sgc {

namespace {

using Word = std::uint64_t;

std::vector<Vertex> degree_order(const SignedGraph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

/// Candidate sets are bitsets over the palette, one row of `words` per
/// vertex, copied on every descent.
class Search {
public:
    // forbid(color, sign) lists palette indices a neighbor across an edge of
    // that sign may no longer take once `color` is placed.
    template <typename Forbid>
    Search(const SignedGraph& g, std::size_t palette, std::size_t first_limit, Forbid forbid)
        : g_(g), palette_(palette), words_((palette + 63) / 64), order_(degree_order(g)),
          assigned_(static_cast<std::size_t>(g.order()), -1)
    {
        forbidden_.resize(2 * palette_);
        for (std::size_t c = 0; c < palette_; ++c)
            for (int s : {1, -1}) forbidden_[slot(c, s)] = forbid(c, s);
        first_limit_ = std::min(first_limit, palette_);
    }

    std::optional<std::vector<Int>> run()
    {
        const auto n = static_cast<std::size_t>(g_.order());
        std::vector<Word> dom(n * words_, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t c = 0; c < palette_; ++c) dom[v * words_ + c / 64] |= Word(1) << (c % 64);
        if (!descend(0, dom)) return std::nullopt;
        return std::vector<Int>(assigned_.begin(), assigned_.end());
    }

private:
    static std::size_t slot(std::size_t c, int s) { return 2 * c + (s > 0 ? 0 : 1); }

    bool descend(std::size_t depth, const std::vector<Word>& dom)
    {
        if (depth == order_.size()) return true;
        const Vertex v = order_[depth];
        const std::size_t limit = depth == 0 ? first_limit_ : palette_;
        for (std::size_t c = 0; c < limit; ++c) {
            if (!(dom[v * words_ + c / 64] >> (c % 64) & 1)) continue;
            std::vector<Word> next = dom;
            bool wiped = false;
            for (const auto& nb : g_.neighbors(v)) {
                if (assigned_[nb.to] >= 0) continue;
                Word* row = next.data() + static_cast<std::size_t>(nb.to) * words_;
                for (std::size_t x : forbidden_[slot(c, nb.sign)]) row[x / 64] &= ~(Word(1) << (x % 64));
                bool empty = true;
                for (std::size_t w = 0; w < words_ && empty; ++w) empty = row[w] == 0;
                if (empty) {
                    wiped = true;
                    break;
                }
            }
            if (wiped) continue;
            assigned_[v] = static_cast<Int>(c);
            if (descend(depth + 1, next)) return true;
            assigned_[v] = -1;
        }
        return false;
    }

    const SignedGraph& g_;
    std::size_t palette_;
    std::size_t words_;
    std::size_t first_limit_ = 0;
    std::vector<Vertex> order_;
    std::vector<Int> assigned_;
    std::vector<std::vector<std::size_t>> forbidden_;
};

void check_params(Int k, Int d, const char* op)
{
    if (d < 1 || k < 2 * d) throw PreconditionError(op, "k >= 2d >= 2");
}

} // namespace

std::optional<KDColoring> feasible(const SignedGraph& g, Int k, Int d)
{
    check_params(k, d, "feasible");
    const auto palette = static_cast<std::size_t>(k);
    // Negating every color preserves validity, so the first vertex may stay in [0, k/2].
    Search search(g, palette, palette / 2 + 1, [&](std::size_t c, int s) {
        std::vector<std::size_t> out;
        for (Int delta = -(d - 1); delta <= d - 1; ++delta) {
            // |c - s x|_k < d  <=>  s x = c + delta
            Int sx = static_cast<Int>(c) + delta;
            out.push_back(static_cast<std::size_t>(mod_rem(s > 0 ? sx : -sx, k)));
        }
        return out;
    });
    auto colors = search.run();
    if (!colors) return std::nullopt;
    KDColoring out(k, d, std::move(*colors));
    if (!is_valid(g, out)) throw InternalError("feasible: search returned an invalid coloring");
    return out;
}

std::optional<KDColoring> brute_force_feasible(const SignedGraph& g, Int k, Int d)
{
    check_params(k, d, "brute-force");
    const auto n = static_cast<std::size_t>(g.order());
    Int total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > brute_force_limit / k) throw Error("brute force refuses: k^n exceeds 1e8");
        total *= k;
    }
    std::vector<Int> colors(n, 0);
    for (Int step = 0; step < total; ++step) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            Int a = colors[e.u], b = colors[e.v];
            if (circ_dist(e.sign > 0 ? a - b : a + b, k) < d) {
                ok = false;
                break;
            }
        }
        if (ok) return KDColoring(k, d, colors);
        for (std::size_t i = n; i-- > 0;) {
            if (++colors[i] < k) break;
            colors[i] = 0;
        }
    }
    return std::nullopt;
}

ChiResult chi(const SignedGraph& g)
{
    const Int bound = static_cast<Int>(g.order()) + 2;
    for (Int k = 2; k <= std::max<Int>(bound, 2); ++k)
        if (auto c = feasible(g, k, 1)) return {k, std::move(*c)};
    throw InternalError("chi: no (k,1)-coloring with k <= n + 2");
}

ChiCResult chi_c(const SignedGraph& g) { return chi_c(g, chi(g).value); }

ChiCResult chi_c(const SignedGraph& g, Int chi_value)
{
    const Int n = g.order();
    if (n == 0) return {Ratio(2), KDColoring(2, 1, {})};
    std::vector<std::pair<Int, Int>> candidates;
    for (Int k = 2; k <= 4 * n; ++k)
        for (Int d = 1; 2 * d <= k; ++d)
            if ((chi_value - 1) * d <= k && k <= chi_value * d) candidates.emplace_back(k, d);
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        Ratio ra(a.first, a.second), rb(b.first, b.second);
        return std::tie(ra, a.first, a.second) < std::tie(rb, b.first, b.second);
    });
    for (auto [k, d] : candidates)
        if (auto c = feasible(g, k, d)) return {Ratio(k, d), std::move(*c)};
    throw InternalError("chi_c: no feasible (k,d) in [chi-1, chi] with k <= 4n");
}

std::vector<Int> signed_color_set(Int m)
{
    if (m < 1) throw Error("signed color set needs m >= 1");
    std::vector<Int> out;
    if (m % 2 == 1) out.push_back(0);
    for (Int j = 1; j <= m / 2; ++j) {
        out.push_back(j);
        out.push_back(-j);
    }
    return out;
}

bool is_pm_coloring(const SignedGraph& g, Int m, const std::vector<Int>& colors)
{
    if (colors.size() != static_cast<std::size_t>(g.order())) return false;
    auto set = signed_color_set(m);
    for (Int c : colors)
        if (std::find(set.begin(), set.end(), c) == set.end()) return false;
    for (const auto& e : g.edges())
        if (colors[e.u] == e.sign * colors[e.v]) return false;
    return true;
}

std::optional<std::vector<Int>> pm_coloring(const SignedGraph& g, Int m)
{
    const auto set = signed_color_set(m);
    auto index_of = [&](Int value) -> std::optional<std::size_t> {
        auto it = std::find(set.begin(), set.end(), value);
        if (it == set.end()) return std::nullopt;
        return static_cast<std::size_t>(it - set.begin());
    };
    Search search(g, set.size(), set.size(), [&](std::size_t c, int s) {
        std::vector<std::size_t> out;
        if (auto i = index_of(s * set[c])) out.push_back(*i);
        return out;
    });
    auto idx = search.run();
    if (!idx) return std::nullopt;
    std::vector<Int> out;
    out.reserve(idx->size());
    for (Int i : *idx) out.push_back(set[static_cast<std::size_t>(i)]);
    if (!is_pm_coloring(g, m, out)) throw InternalError("pm_coloring: search returned an invalid coloring");
    return out;
}

std::optional<std::vector<Int>> brute_force_pm_coloring(const SignedGraph& g, Int m)
{
    const auto set = signed_color_set(m);
    const auto n = static_cast<std::size_t>(g.order());
    const Int base = static_cast<Int>(set.size());
    Int total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > brute_force_limit / base) throw Error("brute force refuses: |M|^n exceeds 1e8");
        total *= base;
    }
    std::vector<Int> idx(n, 0), colors(n);
    for (Int step = 0; step < total; ++step) {
        for (std::size_t i = 0; i < n; ++i) colors[i] = set[static_cast<std::size_t>(idx[i])];
        if (is_pm_coloring(g, m, colors)) return colors;
        for (std::size_t i = n; i-- > 0;) {
            if (++idx[i] < base) break;
            idx[i] = 0;
        }
    }
    return std::nullopt;
}

Int chi_pm(const SignedGraph& g)
{
    const Int bound = static_cast<Int>(g.order()) + 2;
    for (Int m = 1; m <= bound; ++m)
        if (pm_coloring(g, m)) return m;
    throw InternalError("chi_pm: no M_m-coloring with m <= n + 2");
}

InvariantReport report(const SignedGraph& g)
{
    InvariantReport r{.order = g.order(),
                      .edges = g.size(),
                      .edgeless_convention = g.size() == 0,
                      .chi = chi(g),
                      .chi_c = {Ratio(2), KDColoring(2, 1, {})},
                      .chi_pm = 0,
                      .pm_witness = {}};
    r.chi_c = chi_c(g, r.chi.value);
    r.chi_pm = chi_pm(g);
    r.pm_witness = *pm_coloring(g, r.chi_pm);

    const Int n = g.order();
    const Int t = r.chi.value - 1;
    const Ratio lower(t);
    r.bounds_ok = lower <= r.chi_c.value && r.chi_c.value <= Ratio(r.chi.value);
    r.gap_ok = r.chi_c.value == lower || n == 0 || r.chi_c.value >= lower * Ratio(4 * n, 4 * n - 1);
    // A (2t,2)-coloring needs 2t >= 4; for t = 1 the pair is outside the definition.
    const bool has_2t_2 = 2 * t >= 4 && feasible(g, 2 * t, 2).has_value();
    r.charac_ok = (r.chi_c.value == lower) == has_2t_2;
    r.pm_ok = r.chi_pm - r.chi.value <= 1 && r.chi.value - r.chi_pm <= 1;
    r.witness_ok = n == 0 || r.chi_c.witness.k() <= 4 * n;
    return r;
}

} // namespace sgc
