#include "sgc/families.hpp"

#include "sgc/errors.hpp"

#include <random>
#include <string>

namespace sgc {

namespace {

void check_probability(double p, const char* name)
{
    if (!(p >= 0.0 && p <= 1.0)) throw Error(std::string(name) + " must lie in [0, 1]");
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SignedGraph circuit(int n, const std::set<int>& negatives)
{
    if (n < 3) throw Error("circuit needs n >= 3, got " + std::to_string(n));
    for (int i : negatives)
        if (i < 0 || i >= n) throw Error("negative edge index " + std::to_string(i) + " out of range");
    std::vector<SignedEdge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, negatives.count(i) ? -1 : 1});
    return SignedGraph(n, std::move(es));
}

SignedGraph k_star(const std::vector<int>& sizes, GroupShape shape)
{
    if (sizes.empty()) throw Error("k_star needs at least one group");
    std::vector<int> group;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2) throw Error("k_star groups need at least two vertices");
        group.insert(group.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    }
    const int n = static_cast<int>(group.size());
    std::vector<SignedEdge> es;
    int base = 0;
    for (int size : sizes) {
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                if (shape == GroupShape::clique || b == a + 1) es.push_back({base + a, base + b, -1});
        base += size;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (group[u] != group[v]) es.push_back({u, v, 1});
    return SignedGraph(n, std::move(es));
}

SignedGraph random_signed(int n, double edge_prob, double neg_prob, std::uint64_t seed)
{
    if (n < 0) throw Error("vertex count must be non-negative");
    check_probability(edge_prob, "edge probability");
    check_probability(neg_prob, "negative probability");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<SignedEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool present = unit(rng) < edge_prob;
            bool negative = unit(rng) < neg_prob;
            if (present) es.push_back({u, v, negative ? -1 : 1});
        }
    return SignedGraph(n, std::move(es));
}

SignedGraph random_bipartite(int n, double edge_prob, double neg_prob, std::uint64_t seed)
{
    if (n < 0) throw Error("vertex count must be non-negative");
    check_probability(edge_prob, "edge probability");
    check_probability(neg_prob, "negative probability");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto& s : side) s = unit(rng) < 0.5 ? 0 : 1;
    std::vector<SignedEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool present = unit(rng) < edge_prob;
            bool negative = unit(rng) < neg_prob;
            if (present && side[u] != side[v]) es.push_back({u, v, negative ? -1 : 1});
        }
    return SignedGraph(n, std::move(es));
}

} // namespace sgc
