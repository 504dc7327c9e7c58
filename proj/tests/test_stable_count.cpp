#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "galocus/stable_count.hpp"

using namespace galocus;

TEST_CASE("j-class admissibility") {
    CHECK(is_admissible(JClass::Generic, 2));
    CHECK_FALSE(is_admissible(JClass::Generic, 3));
    CHECK_FALSE(is_admissible(JClass::Generic, 4));
    CHECK(is_admissible(JClass::J0, 3));
    CHECK(is_admissible(JClass::J0, 6));
    CHECK_FALSE(is_admissible(JClass::J0, 4));
    CHECK(is_admissible(JClass::J1728, 4));
    CHECK_FALSE(is_admissible(JClass::J1728, 6));
    CHECK_THROWS_AS(is_admissible(JClass::J0, 5), std::invalid_argument);
    CHECK(parse_j_class("generic") == JClass::Generic);
    CHECK(parse_j_class("0") == JClass::J0);
    CHECK(parse_j_class("1728") == JClass::J1728);
    CHECK_THROWS_AS(parse_j_class("j0"), std::invalid_argument);
    CHECK(j_class_name(JClass::J1728) == "1728");
}

TEST_CASE("psi_prime_power on pinned cases") {
    CHECK(psi_prime_power(3, 3, 5) == 1);
    CHECK(psi_prime_power(3, 7, 2) == 3);
    CHECK(psi_prime_power(3, 2, 1) == 0);
    CHECK(psi_prime_power(3, 2, 2) == 1);
    CHECK(psi_prime_power(4, 3, 1) == 0);
    CHECK(psi_prime_power(4, 2, 7) == 1);
    CHECK(psi_prime_power(4, 5, 3) == 4);
    CHECK(psi_prime_power(2, 2, 2) == 7);
    CHECK(psi_prime_power(6, 7, 1) == 2);
    CHECK(psi_prime_power(2, 11, 0) == 1);
    // p == 3 mod 4, alpha even: only i = alpha/2 survives, giving a single
    // subgroup (the closure oracle at m = 9 confirms; z^2 = -1 has no root
    // mod 9).
    CHECK(psi_prime_power(4, 3, 2) == 1);
    CHECK(psi_prime_power(4, 7, 4) == 1);
    CHECK_THROWS_AS(psi_prime_power(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(psi_prime_power(3, 6, 1), std::invalid_argument);
}

TEST_CASE("psi on pinned cases") {
    CHECK(psi(2, JClass::Generic, 6) == 12);
    CHECK(psi(3, JClass::Generic, 1) == 0);  // no order-3 automorphism
    CHECK(psi(3, JClass::J0, 1) == 1);
    CHECK(psi(3, JClass::J0, 28) == 2);
    CHECK(psi(4, JClass::J1728, 15) == 0);
    CHECK(psi(4, JClass::J1728, 9) == 1);
    CHECK_THROWS_AS(psi(2, JClass::Generic, 0), std::invalid_argument);
}

TEST_CASE("psi_3 = psi_6 up to 10^4") {
    for (std::uint64_t m = 1; m <= 10000; ++m) {
        CHECK(psi(3, JClass::J0, m) == psi(6, JClass::J0, m));
    }
}

TEST_CASE("enumerate_stable_subgroups on pinned cases") {
    const auto only3 = enumerate_stable_subgroups(3, 3);
    REQUIRE(only3.size() == 1);
    CHECK(only3[0].elements() == Fingerprint{{0, 0}, {1, 2}, {2, 1}});

    const auto only4 = enumerate_stable_subgroups(4, 2);
    REQUIRE(only4.size() == 1);
    CHECK(only4[0].elements() == Fingerprint{{0, 0}, {1, 1}});

    for (std::uint64_t m : {1, 2, 6, 12, 30, 50}) {
        CHECK(enumerate_stable_subgroups(2, m).size() == sigma(m));
    }
    CHECK_THROWS_AS(enumerate_stable_subgroups(2, 501), std::invalid_argument);
    CHECK(enumerate_stable_subgroups(2, 501, 501).size() == sigma(501));
}

TEST_CASE("stable_count_oracle on pinned cases") {
    CHECK(stable_count_oracle(2, 6) == 12);
    CHECK(stable_count_oracle(3, 4) == 1);
    CHECK(stable_count_oracle(4, 3) == 0);
    CHECK(stable_count_oracle(4, 9) == 1);  // m = 9: the p = 3 mod 4 case
    CHECK_THROWS_AS(stable_count_oracle(2, 13), std::invalid_argument);
}

TEST_CASE("three-way agreement for all ell and m <= 12") {
    auto admitting = [](int ell) {
        return ell == 2 ? JClass::Generic : (ell == 4 ? JClass::J1728 : JClass::J0);
    };
    for (std::uint64_t m = 1; m <= 12; ++m) {
        for (int ell : kAutOrders) {
            const std::uint64_t closed = psi(ell, admitting(ell), m);
            CHECK(closed == enumerate_stable_subgroups(ell, m).size());
            CHECK(closed == stable_count_oracle(ell, m));
        }
    }
}

TEST_CASE("constructive enumeration matches psi up to 200, all ell") {
    auto admitting = [](int ell) {
        return ell == 2 ? JClass::Generic : (ell == 4 ? JClass::J1728 : JClass::J0);
    };
    for (std::uint64_t m = 1; m <= 200; ++m) {
        for (int ell : kAutOrders) {
            const auto subs = enumerate_stable_subgroups(ell, m);
            CHECK(subs.size() == psi(ell, admitting(ell), m));
            const AutAction action = aut_action(ell, m);
            for (const auto& s : subs) {
                CHECK(s.order() == m);
                CHECK(is_stable(s, action));
            }
        }
    }
}

TEST_CASE("psi multiplicativity on random coprime pairs") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> pick(1, 10000);
    auto admitting = [](int ell) {
        return ell == 2 ? JClass::Generic : (ell == 4 ? JClass::J1728 : JClass::J0);
    };
    for (int t = 0; t < 300;) {
        const std::uint64_t a = pick(rng);
        const std::uint64_t b = pick(rng) % (10000 / a) + 1;
        if (std::gcd(a, b) != 1) continue;
        ++t;
        for (int ell : kAutOrders) {
            const JClass j = admitting(ell);
            CHECK(psi(ell, j, a * b) == psi(ell, j, a) * psi(ell, j, b));
        }
    }
}
