#pragma once

#include "sgc/sgraph.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace sgc {

// Cycle 0-1-...-(n-1)-0; edge i joins i and i+1 (mod n). Listed edges are negative.
SignedGraph circuit(int n, const std::set<int>& negatives = {});

enum class GroupShape { path, clique };

/// n groups of the given sizes, each an all-negative connected graph
/// (a path by default), with every cross-group pair joined positively.
SignedGraph k_star(const std::vector<int>& sizes, GroupShape shape = GroupShape::path);

// Each pair is an edge with probability edge_prob; each edge negative with
// probability neg_prob. Same seed, same graph.
SignedGraph random_signed(int n, double edge_prob, double neg_prob, std::uint64_t seed);

// Random graph whose underlying graph is bipartite (parts drawn at random).
SignedGraph random_bipartite(int n, double edge_prob, double neg_prob, std::uint64_t seed);

// SplitMix64 finalizer; used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace sgc
