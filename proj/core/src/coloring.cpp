#include "sgc/coloring.hpp"

#include "sgc/errors.hpp"

#include <string>

namespace sgc {

KDColoring::KDColoring(Int k, Int d, std::vector<Int> colors) : k_(k), d_(d), colors_(std::move(colors))
{
    if (d_ < 1) throw Error("(k,d)-coloring needs d >= 1, got d=" + std::to_string(d_));
    if (k_ < checked_mul(2, d_))
        throw Error("(k,d)-coloring needs 2d <= k, got (" + std::to_string(k_) + "," + std::to_string(d_) + ")");
    for (Int c : colors_)
        if (c < 0 || c >= k_) throw Error("color " + std::to_string(c) + " outside Z_" + std::to_string(k_));
}

std::vector<char> KDColoring::used() const
{
    std::vector<char> out(static_cast<std::size_t>(k_), 0);
    for (Int c : colors_) out[static_cast<std::size_t>(c)] = 1;
    return out;
}

RColoring::RColoring(Ratio r, std::vector<Ratio> colors) : r_(r), colors_(std::move(colors))
{
    if (r_ < Ratio(2)) throw Error("r-coloring needs r >= 2, got r=" + r_.to_string());
    for (const auto& c : colors_)
        if (c < Ratio(0) || c >= r_) throw Error("color " + c.to_string() + " outside [0, " + r_.to_string() + ")");
}

std::vector<Violation> verify_kd(const SignedGraph& g, const KDColoring& c)
{
    if (c.size() != static_cast<std::size_t>(g.order()))
        throw GraphMismatch("coloring has " + std::to_string(c.size()) + " entries for a graph of order " + std::to_string(g.order()));
    std::vector<Violation> out;
    for (const auto& e : g.edges()) {
        Int a = c[e.u], b = c[e.v];
        Int dist = circ_dist(e.sign > 0 ? a - b : a + b, c.k());
        if (dist < c.d()) out.push_back({e, Ratio(dist), Ratio(c.d())});
    }
    return out;
}

std::vector<Violation> verify_r(const SignedGraph& g, const RColoring& f)
{
    if (f.size() != static_cast<std::size_t>(g.order()))
        throw GraphMismatch("coloring has " + std::to_string(f.size()) + " entries for a graph of order " + std::to_string(g.order()));
    std::vector<Violation> out;
    const Ratio one(1);
    for (const auto& e : g.edges()) {
        const auto& a = f.colors()[e.u];
        const auto& b = f.colors()[e.v];
        Ratio dist = circ_dist(e.sign > 0 ? a - b : a + b, f.r());
        if (dist < one) out.push_back({e, dist, one});
    }
    return out;
}

bool is_valid(const SignedGraph& g, const KDColoring& c) { return verify_kd(g, c).empty(); }
bool is_valid(const SignedGraph& g, const RColoring& f) { return verify_r(g, f).empty(); }

std::vector<Int> missing_inverse_pairs(const KDColoring& c)
{
    auto used = c.used();
    std::vector<Int> out;
    for (Int x = 0; x < c.k(); ++x)
        if (!used[x] && !used[mod_rem(c.k() - x, c.k())]) out.push_back(x);
    return out;
}

} // namespace sgc
