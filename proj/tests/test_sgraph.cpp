#include "oracles.hpp"

#include "sgc/errors.hpp"
#include "sgc/families.hpp"
#include "sgc/sgraph.hpp"

#include <doctest.h>

#include <random>

using namespace sgc;

namespace {

SignedGraph triangle(Sign a, Sign b, Sign c) { return SignedGraph(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}}); }

std::vector<Vertex> random_walk(std::mt19937_64& rng, int n, int len)
{
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> out(static_cast<std::size_t>(len));
    for (auto& v : out) v = pick(rng);
    return out;
}

// Checks the certificate that comes with a balance verdict.
void check_certificate(const SignedGraph& g, const BalanceResult& r)
{
    if (r.balanced) {
        REQUIRE(r.potential.size() == static_cast<std::size_t>(g.order()));
        for (const auto& e : g.edges()) CHECK(e.sign == r.potential[e.u] * r.potential[e.v]);
        return;
    }
    REQUIRE(r.circuit.size() >= 3);
    std::set<Vertex> distinct(r.circuit.begin(), r.circuit.end());
    CHECK(distinct.size() == r.circuit.size());
    int negatives = 0;
    for (std::size_t i = 0; i < r.circuit.size(); ++i) {
        auto s = g.sign_of(r.circuit[i], r.circuit[(i + 1) % r.circuit.size()]);
        REQUIRE(s.has_value());
        negatives += *s < 0;
    }
    CHECK(negatives % 2 == 1);
}

} // namespace

TEST_CASE("construction validates and normalizes")
{
    SignedGraph g(3, {{2, 0, -1}, {1, 0, 1}});
    CHECK(g.edges() == std::vector<SignedEdge>{{0, 1, 1}, {0, 2, -1}});
    CHECK(g.sign_of(2, 0) == -1);
    CHECK(!g.sign_of(1, 2).has_value());
    CHECK(g.degree(0) == 2);
    CHECK(g.negative_count() == 1);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 0, 1}}), InvalidVertex);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 2, 1}}), InvalidVertex);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 1}, {1, 0, -1}}), InvalidVertex);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 0}}), Error);
    CHECK_THROWS_AS(SignedGraph(-1, {}), InvalidVertex);
}

TEST_CASE("switching")
{
    SignedGraph p2neg(2, {{0, 1, -1}});
    CHECK(switch_at(p2neg, 0) == SignedGraph(2, {{0, 1, 1}}));

    auto c3 = triangle(1, 1, 1);
    auto s = switch_at(c3, 0);
    CHECK(s.sign_of(0, 1) == -1);
    CHECK(s.sign_of(0, 2) == -1);
    CHECK(s.sign_of(1, 2) == 1);
    CHECK(s.same_underlying(c3));

    CHECK(switch_at(switch_at(c3, 1), 1) == c3);
    CHECK_THROWS_AS(switch_at(c3, 3), InvalidVertex);
    CHECK_THROWS_AS(switch_at(c3, -1), InvalidVertex);

    std::vector<Vertex> twice{2, 1, 2};
    CHECK(switch_all(c3, twice) == switch_at(c3, 1));
}

TEST_CASE("balance examples")
{
    auto c5 = circuit(5);
    auto r = is_balanced(c5);
    CHECK(r.balanced);
    check_certificate(c5, r);

    auto uc3 = triangle(-1, 1, 1);
    r = is_balanced(uc3);
    CHECK(!r.balanced);
    check_certificate(uc3, r);
    CHECK(std::set<Vertex>(r.circuit.begin(), r.circuit.end()) == std::set<Vertex>{0, 1, 2});

    auto c4 = circuit(4, {0, 2});
    CHECK(is_balanced(c4).balanced);
    CHECK(sgc::testing::naive_balanced(c4));
}

TEST_CASE("antibalance examples")
{
    CHECK(is_antibalanced(triangle(-1, -1, -1)));
    CHECK(is_antibalanced(circuit(4)));
    auto one_neg = circuit(4, {1});
    CHECK(!is_antibalanced(one_neg));
    CHECK(!sgc::testing::naive_balanced(one_neg.negated()));
}

TEST_CASE("equivalence examples")
{
    auto one = triangle(-1, 1, 1);
    auto three = triangle(-1, -1, -1);
    CHECK(is_equivalent(one, three));
    // Explicit switching: at vertex 2 the two positive edges turn negative.
    CHECK(switch_at(one, 2) == three);

    CHECK(!is_equivalent(triangle(1, 1, 1), one));
    CHECK(is_equivalent(one, switch_at(one, 1)));
    CHECK_THROWS_AS(is_equivalent(one, circuit(4)), GraphMismatch);
    CHECK_THROWS_AS(is_equivalent(one, SignedGraph(3, {{0, 1, 1}, {1, 2, 1}})), GraphMismatch);
}

TEST_CASE("normalize")
{
    auto bal = switch_all(circuit(6), std::vector<Vertex>{1, 4});
    auto nb = normalize(bal);
    CHECK(nb.graph.negative_count() == 0);
    CHECK(switch_all(bal, nb.switched) == nb.graph);

    auto uc3 = normalize(triangle(-1, -1, -1));
    CHECK(uc3.graph.negative_count() == 1);

    auto plain = circuit(5);
    auto same = normalize(plain);
    CHECK(same.graph == plain);
    CHECK(same.switched.empty());
}

TEST_CASE("balance agrees with the switching oracle and certifies itself")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 600; ++i) {
        const int n = static_cast<int>(rng() % 8) + 1;
        auto g = random_signed(n, 0.5, 0.5, rng());
        auto r = is_balanced(g);
        CHECK(r.balanced == sgc::testing::naive_balanced(g));
        check_certificate(g, r);
        CHECK(is_antibalanced(g) == sgc::testing::naive_balanced(g.negated()));

        auto norm = normalize(g);
        CHECK(is_equivalent(g, norm.graph));
        CHECK(switch_all(g, norm.switched) == norm.graph);
    }
}

TEST_CASE("balance and antibalance are switching invariant")
{
    std::mt19937_64 rng(22);
    for (int i = 0; i < 400; ++i) {
        const int n = static_cast<int>(rng() % 9) + 1;
        auto g = random_signed(n, 0.6, 0.5, rng());
        auto h = switch_all(g, random_walk(rng, n, 6));
        CHECK(is_balanced(g).balanced == is_balanced(h).balanced);
        CHECK(is_antibalanced(g) == is_antibalanced(h));
        CHECK(is_equivalent(g, h));
    }
}

TEST_CASE("equivalence is an equivalence relation on random signatures")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const int n = static_cast<int>(rng() % 7) + 2;
        auto base = random_signed(n, 0.7, 0.0, rng());
        auto resign = [&] {
            std::vector<Sign> s(base.size());
            for (auto& x : s) x = (rng() & 1) ? 1 : -1;
            return base.with_signs(s);
        };
        auto a = resign(), b = resign(), c = resign();
        // Bias toward equivalent pairs so transitivity is exercised.
        if (rng() & 1) b = switch_all(a, random_walk(rng, n, 3));
        if (rng() & 1) c = switch_all(b, random_walk(rng, n, 3));
        CHECK(is_equivalent(a, a));
        CHECK(is_equivalent(a, b) == is_equivalent(b, a));
        if (is_equivalent(a, b) && is_equivalent(b, c)) CHECK(is_equivalent(a, c));
    }
}

TEST_CASE("bipartiteness and components")
{
    CHECK(is_bipartite(circuit(6)));
    CHECK(!is_bipartite(circuit(5)));
    CHECK(is_bipartite(SignedGraph(3, {})));
    CHECK(component_count(SignedGraph(4, {{0, 1, 1}})) == 3);
    CHECK(component_count(SignedGraph(0, {})) == 0);
}
