#include "sgc/sgraph.hpp"

#include "sgc/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace sgc {

namespace {

struct SpanningForest {
    std::vector<Sign> potential;
    std::vector<Vertex> parent;
    std::vector<int> depth;
    // First edge (in BFS discovery order) inconsistent with the potential.
    std::optional<SignedEdge> conflict;
};

SpanningForest bfs_forest(const SignedGraph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    SpanningForest f{std::vector<Sign>(n, 0), std::vector<Vertex>(n, -1), std::vector<int>(n, 0), std::nullopt};
    for (Vertex root = 0; root < g.order(); ++root) {
        if (f.potential[root] != 0) continue;
        f.potential[root] = 1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (const auto& nb : g.neighbors(u)) {
                if (f.potential[nb.to] == 0) {
                    f.potential[nb.to] = f.potential[u] * nb.sign;
                    f.parent[nb.to] = u;
                    f.depth[nb.to] = f.depth[u] + 1;
                    q.push(nb.to);
                }
                else if (!f.conflict && f.potential[nb.to] != f.potential[u] * nb.sign) {
                    f.conflict = SignedEdge{u, nb.to, nb.sign};
                }
            }
        }
    }
    return f;
}

void check_vertex(const SignedGraph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(g.order()));
}

} // namespace

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n)
{
    if (n < 0) throw InvalidVertex("negative vertex count");
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw InvalidVertex("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has an endpoint out of range");
        if (e.u == e.v) throw InvalidVertex("loop at vertex " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1) throw Error("edge sign must be +1 or -1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw InvalidVertex("parallel edge " + std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v));
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        adj_[e.u].push_back({e.v, e.sign, i});
        adj_[e.v].push_back({e.u, e.sign, i});
    }
}

std::optional<Sign> SignedGraph::sign_of(Vertex u, Vertex v) const
{
    for (const auto& nb : neighbors(u))
        if (nb.to == v) return nb.sign;
    return std::nullopt;
}

bool SignedGraph::same_underlying(const SignedGraph& o) const
{
    if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v) return false;
    return true;
}

std::size_t SignedGraph::negative_count() const
{
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const auto& e) { return e.sign < 0; }));
}

SignedGraph SignedGraph::negated() const
{
    auto es = edges_;
    for (auto& e : es) e.sign = -e.sign;
    return SignedGraph(n_, std::move(es));
}

SignedGraph SignedGraph::with_signs(std::span<const Sign> signs) const
{
    if (signs.size() != edges_.size()) throw GraphMismatch("signature length does not match edge count");
    auto es = edges_;
    for (std::size_t i = 0; i < es.size(); ++i) es[i].sign = signs[i];
    return SignedGraph(n_, std::move(es));
}

SignedGraph switch_at(const SignedGraph& g, Vertex v)
{
    check_vertex(g, v);
    auto es = g.edges();
    for (auto& e : es)
        if (e.u == v || e.v == v) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(es));
}

SignedGraph switch_all(const SignedGraph& g, std::span<const Vertex> vertices)
{
    std::vector<char> flip(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : vertices) {
        check_vertex(g, v);
        flip[v] ^= 1;
    }
    auto es = g.edges();
    for (auto& e : es)
        if (flip[e.u] != flip[e.v]) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(es));
}

BalanceResult is_balanced(const SignedGraph& g)
{
    auto f = bfs_forest(g);
    BalanceResult out;
    if (!f.conflict) {
        out.balanced = true;
        out.potential = std::move(f.potential);
        return out;
    }
    // Tree path u -> lca and v -> lca, closed by the conflicting edge.
    Vertex a = f.conflict->u, b = f.conflict->v;
    std::vector<Vertex> left{a}, right{b};
    while (f.depth[a] > f.depth[b]) left.push_back(a = f.parent[a]);
    while (f.depth[b] > f.depth[a]) right.push_back(b = f.parent[b]);
    while (a != b) {
        left.push_back(a = f.parent[a]);
        right.push_back(b = f.parent[b]);
    }
    right.pop_back(); // lca already in left
    out.circuit = std::move(left);
    out.circuit.insert(out.circuit.end(), right.rbegin(), right.rend());
    return out;
}

bool is_antibalanced(const SignedGraph& g) { return is_balanced(g.negated()).balanced; }

bool is_equivalent(const SignedGraph& a, const SignedGraph& b)
{
    if (!a.same_underlying(b)) throw GraphMismatch("signed graphs do not share an underlying graph");
    std::vector<Sign> product(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) product[i] = a.edges()[i].sign * b.edges()[i].sign;
    return is_balanced(a.with_signs(product)).balanced;
}

Normalized normalize(const SignedGraph& g)
{
    auto f = bfs_forest(g);
    Normalized out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (f.potential[v] < 0) out.switched.push_back(v);
    out.graph = switch_all(g, out.switched);
    return out;
}

bool is_bipartite(const SignedGraph& g)
{
    // Bipartite iff the all-negative signature is balanced.
    std::vector<Sign> neg(g.size(), -1);
    return is_balanced(g.with_signs(neg)).balanced;
}

int component_count(const SignedGraph& g)
{
    auto f = bfs_forest(g);
    return static_cast<int>(std::count(f.parent.begin(), f.parent.end(), -1));
}

} // namespace sgc
