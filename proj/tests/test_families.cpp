#include "oracles.hpp"

#include "sgc/errors.hpp"
#include "sgc/families.hpp"

#include <doctest.h>

using namespace sgc;

TEST_CASE("circuits")
{
    auto c5 = circuit(5);
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    CHECK(is_balanced(c5).balanced);

    auto uc3 = circuit(3, {0});
    CHECK(uc3.sign_of(0, 1) == -1);
    CHECK(uc3.negative_count() == 1);
    CHECK(!is_balanced(uc3).balanced);

    auto c4 = circuit(4, {0, 1});
    CHECK(is_balanced(c4).balanced);
    CHECK(sgc::testing::naive_balanced(c4));

    CHECK_THROWS_AS(circuit(2), Error);
    CHECK_THROWS_AS(circuit(4, {4}), Error);
}

TEST_CASE("circuit balance follows the parity of the negative set")
{
    for (int n = 3; n <= 9; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::set<int> neg;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) neg.insert(i);
            CHECK(is_balanced(circuit(n, neg)).balanced == (neg.size() % 2 == 0));
        }
    for (int n = 3; n <= 11; n += 2) {
        std::set<int> all;
        for (int i = 0; i < n; ++i) all.insert(i);
        CHECK(is_antibalanced(circuit(n, all)));
    }
}

TEST_CASE("k_star")
{
    auto k2 = k_star({2, 2});
    CHECK(k2.order() == 4);
    CHECK(k2.negative_count() == 2);
    CHECK(k2.size() == 6);

    auto k1 = k_star({2});
    CHECK(k1 == SignedGraph(2, {{0, 1, -1}}));

    auto clique = k_star({3, 2}, GroupShape::clique);
    CHECK(clique.negative_count() == 4);
    CHECK(clique.size() == 4 + 6);

    CHECK_THROWS_AS(k_star({2, 1}), Error);
    CHECK_THROWS_AS(k_star({}), Error);
}

TEST_CASE("k_star with an even number of groups carries the odd-color (2n,2)-coloring")
{
    for (int groups = 2; groups <= 6; groups += 2) {
        auto g = k_star(std::vector<int>(static_cast<std::size_t>(groups), 2));
        std::vector<Int> colors;
        for (int i = 1; i <= groups; ++i) colors.insert(colors.end(), 2, 2 * i - 1);
        CHECK(sgc::testing::naive_kd_valid(g, 2 * groups, 2, colors));
    }
}

TEST_CASE("random generators")
{
    auto full = random_signed(6, 1.0, 0.0, 1);
    CHECK(full.size() == 15);
    CHECK(full.negative_count() == 0);
    CHECK(random_signed(6, 0.0, 0.5, 1).size() == 0);
    CHECK(random_signed(8, 0.5, 0.5, 42) == random_signed(8, 0.5, 0.5, 42));
    CHECK(random_signed(8, 0.5, 0.5, 42).edges() != random_signed(8, 0.5, 0.5, 43).edges());
    CHECK_THROWS_AS(random_signed(4, 1.5, 0.5, 1), Error);
    CHECK_THROWS_AS(random_signed(4, 0.5, -0.1, 1), Error);

    for (std::uint64_t s = 0; s < 100; ++s) CHECK(is_bipartite(random_bipartite(8, 0.7, 0.5, s)));
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    CHECK(mix_seed(1, 2) != mix_seed(1, 3));
}
