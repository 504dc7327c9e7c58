#include <doctest.h>

#include <algorithm>
#include <set>

#include "galocus/torsion.hpp"

using namespace galocus;

namespace {

std::array<std::array<std::uint64_t, 2>, 2> mat_mul_mod(
    const std::array<std::array<std::uint64_t, 2>, 2>& a,
    const std::array<std::array<std::uint64_t, 2>, 2>& b, std::uint64_t m) {
    std::array<std::array<std::uint64_t, 2>, 2> out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = (a[r][0] * b[0][c] + a[r][1] * b[1][c]) % m;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("aut_action matrices on pinned cases") {
    CHECK(aut_action(2, 5).matrix == std::array<std::array<std::uint64_t, 2>, 2>{{{4, 0}, {0, 4}}});
    CHECK(aut_action(3, 7).matrix == std::array<std::array<std::uint64_t, 2>, 2>{{{0, 6}, {1, 6}}});
    CHECK(aut_action(4, 2).matrix == std::array<std::array<std::uint64_t, 2>, 2>{{{0, 1}, {1, 0}}});
    CHECK(aut_action(6, 5).matrix == std::array<std::array<std::uint64_t, 2>, 2>{{{0, 1}, {4, 1}}});
    CHECK_THROWS_AS(aut_action(5, 7), std::invalid_argument);
    CHECK_THROWS_AS(aut_action(2, 0), std::invalid_argument);
}

TEST_CASE("aut_action has order ell and determinant 1 for all m <= 200") {
    for (std::uint64_t m = 1; m <= 200; ++m) {
        for (int ell : kAutOrders) {
            const AutAction a = aut_action(ell, m);
            auto power = a.matrix;
            for (int k = 1; k < ell; ++k) power = mat_mul_mod(power, a.matrix, m);
            const std::array<std::array<std::uint64_t, 2>, 2> identity{
                {{1 % m, 0}, {0, 1 % m}}};
            CHECK(power == identity);
            const std::uint64_t det = (a.matrix[0][0] * a.matrix[1][1] % m + m -
                                       a.matrix[0][1] * a.matrix[1][0] % m) %
                                      m;
            CHECK(det == 1 % m);
        }
    }
}

TEST_CASE("subgroup_from_generators on pinned cases") {
    const std::vector<TorsionPair> g1{{1, 1}};
    const auto s1 = TorsionSubgroup::from_generators(2, g1);
    CHECK(s1.order() == 2);
    CHECK(s1.elements() == Fingerprint{{0, 0}, {1, 1}});

    const std::vector<TorsionPair> g2{{1, 2}};
    const auto s2 = TorsionSubgroup::from_generators(3, g2);
    CHECK(s2.order() == 3);
    CHECK(s2.elements() == Fingerprint{{0, 0}, {1, 2}, {2, 1}});

    const std::vector<TorsionPair> g3{{2, 0}, {0, 3}};
    const auto s3 = TorsionSubgroup::from_generators(6, g3);
    CHECK(s3.order() == 6);
    CHECK(s3.elements().size() == 6);
    REQUIRE(s3.components().size() == 2);
    CHECK(s3.components()[0] == PrimeComponent{2, 1, 1, 0});
    CHECK(s3.components()[1] == PrimeComponent{3, 1, 0, 0});
}

TEST_CASE("subgroup_from_generators rejects wrong orders") {
    const std::vector<TorsionPair> small{{2, 0}};
    CHECK_THROWS_AS(TorsionSubgroup::from_generators(4, small), CanonicalizationError);
    const std::vector<TorsionPair> large{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(TorsionSubgroup::from_generators(2, large), CanonicalizationError);
}

TEST_CASE("is_stable on pinned cases") {
    const std::vector<TorsionPair> diag{{1, 1}};
    const std::vector<TorsionPair> axis{{1, 0}};
    CHECK(is_stable(TorsionSubgroup::from_generators(2, diag), aut_action(4, 2)));
    CHECK_FALSE(is_stable(TorsionSubgroup::from_generators(2, axis), aut_action(4, 2)));
    CHECK_THROWS_AS(is_stable(TorsionSubgroup::from_generators(2, diag), aut_action(4, 4)),
                    std::invalid_argument);
}

TEST_CASE("every subgroup is stable under negation") {
    for (std::uint64_t m = 1; m <= 30; ++m) {
        const AutAction negation = aut_action(2, m);
        for (const auto& s : enumerate_order_m_subgroups(m)) {
            CHECK(is_stable(s, negation));
        }
    }
}

TEST_CASE("stability and identity depend only on the fingerprint") {
    for (std::uint64_t m : {4, 6, 9, 12}) {
        for (const auto& s : enumerate_order_m_subgroups(m)) {
            // Regenerate from the canonical generator pair.
            const auto gens = s.canonical_generators();
            const std::vector<TorsionPair> pair_gens{gens[0], gens[1]};
            const auto rebuilt = TorsionSubgroup::from_generators(m, pair_gens);
            CHECK(rebuilt == s);
            // And from the full element list as a generating set.
            const auto rebuilt2 = TorsionSubgroup::from_generators(m, s.elements());
            CHECK(rebuilt2 == s);
            for (int ell : kAutOrders) {
                const AutAction a = aut_action(ell, m);
                CHECK(is_stable(rebuilt, a) == is_stable(rebuilt2, a));
            }
        }
    }
}

TEST_CASE("closure oracle on pinned cases") {
    CHECK(closure_oracle_enumerate(1).size() == 1);
    CHECK(closure_oracle_enumerate(2).size() == 3);
    CHECK(closure_oracle_enumerate(6).size() == 12);  // sigma(6)
    CHECK_THROWS_AS(closure_oracle_enumerate(13), std::invalid_argument);
    CHECK(closure_oracle_enumerate(13, 13).size() == sigma(13));
}

TEST_CASE("closure oracle output is sorted by fingerprint") {
    const auto subs = closure_oracle_enumerate(8);
    CHECK(std::is_sorted(subs.begin(), subs.end()));
}

TEST_CASE("S_{x,i} enumeration matches sigma and the closure oracle") {
    CHECK(enumerate_order_m_subgroups(1).size() == 1);
    CHECK(enumerate_order_m_subgroups(4).size() == 7);
    CHECK(enumerate_order_m_subgroups(12).size() == 28);
    for (std::uint64_t m = 1; m <= 200; ++m) {
        CHECK(enumerate_order_m_subgroups(m).size() == sigma(m));
    }
    for (std::uint64_t m = 1; m <= 12; ++m) {
        auto parametrized = enumerate_order_m_subgroups(m);
        auto oracle = closure_oracle_enumerate(m);
        std::sort(parametrized.begin(), parametrized.end());
        CHECK(parametrized.size() == oracle.size());
        CHECK(std::equal(parametrized.begin(), parametrized.end(), oracle.begin()));
    }
}

TEST_CASE("every enumerated subgroup has exactly m elements, closed") {
    for (std::uint64_t m : {1, 2, 6, 8, 9, 30, 36, 60}) {
        for (const auto& s : enumerate_order_m_subgroups(m)) {
            CHECK(s.order() == m);
            CHECK(s.elements().size() == m);
            // explicit closure of the canonical generators reproduces it
            const auto gens = s.canonical_generators();
            const std::vector<TorsionPair> pair_gens{gens[0], gens[1]};
            CHECK(subgroup_closure(m, pair_gens) == s.elements());
        }
    }
}
