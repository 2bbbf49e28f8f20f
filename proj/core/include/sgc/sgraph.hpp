#pragma once

#include "sgc/arith.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sgc {

using Vertex = int;
using Sign = int; // +1 or -1

struct SignedEdge {
    Vertex u;
    Vertex v;
    Sign sign;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// A simple finite graph with a +1/-1 label on every edge.
///
/// Edges are stored with u < v, sorted, and never change after
/// construction; switching and friends return new graphs.
class SignedGraph {
public:
    struct Neighbor {
        Vertex to;
        Sign sign;
        std::size_t edge; // index into edges()
    };

    SignedGraph() = default;
    // Throws InvalidVertex on loops, duplicates or out-of-range endpoints.
    SignedGraph(int n, std::vector<SignedEdge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    // Sign of edge uv, or nullopt when u and v are not adjacent.
    std::optional<Sign> sign_of(Vertex u, Vertex v) const;

    bool same_underlying(const SignedGraph& o) const;
    std::size_t negative_count() const;

    SignedGraph negated() const;
    SignedGraph with_signs(std::span<const Sign> signs) const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
};

// Flip the sign of every edge at v.
SignedGraph switch_at(const SignedGraph& g, Vertex v);
// Switch at each listed vertex in turn (a vertex listed twice cancels).
SignedGraph switch_all(const SignedGraph& g, std::span<const Vertex> vertices);

struct BalanceResult {
    bool balanced = false;
    // Set when balanced: sign(uv) = potential[u] * potential[v] on every edge.
    std::vector<Sign> potential;
    // Set when unbalanced: closed walk v0 v1 ... v_{l-1} (v_{l-1} adjacent to
    // v0) whose edges carry an odd number of negative signs.
    std::vector<Vertex> circuit;
};

BalanceResult is_balanced(const SignedGraph& g);
bool is_antibalanced(const SignedGraph& g);
// Throws GraphMismatch unless both share an underlying graph.
bool is_equivalent(const SignedGraph& a, const SignedGraph& b);

struct Normalized {
    SignedGraph graph;
    std::vector<Vertex> switched; // ascending
};

// Switch so that a BFS spanning forest is all-positive.
Normalized normalize(const SignedGraph& g);

bool is_bipartite(const SignedGraph& g);
int component_count(const SignedGraph& g);

} // namespace sgc
