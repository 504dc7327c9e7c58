#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "galocus/modarith.hpp"

using namespace galocus;

TEST_CASE("factorize on known inputs") {
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK(factorize(720) == Factorization{{2, 4}, {3, 2}, {5, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize invariants up to 2000") {
    for (std::uint64_t m = 1; m <= 2000; ++m) {
        std::uint64_t product = 1;
        std::uint64_t previous = 0;
        for (const auto& [p, e] : factorize(m)) {
            CHECK(is_prime(p));
            CHECK(e >= 1);
            CHECK(p > previous);
            previous = p;
            product *= pow_u64(p, e);
        }
        CHECK(product == m);
    }
}

TEST_CASE("sigma on known inputs") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(4) == 7);
    CHECK(sigma(6) == 12);
    CHECK_THROWS_AS(sigma(0), std::invalid_argument);
}

TEST_CASE("sigma equals the divisor-sum sieve up to 10^4") {
    const std::uint64_t limit = 10000;
    std::vector<std::uint64_t> sieve(limit + 1, 0);
    for (std::uint64_t d = 1; d <= limit; ++d) {
        for (std::uint64_t k = d; k <= limit; k += d) sieve[k] += d;
    }
    for (std::uint64_t m = 1; m <= limit; ++m) CHECK(sigma(m) == sieve[m]);
}

TEST_CASE("sigma is multiplicative on random coprime pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1000000);
    for (int t = 0; t < 500;) {
        const std::uint64_t a = pick(rng) % 1000 + 1;
        const std::uint64_t b = pick(rng) % (1000000 / a) + 1;
        if (std::gcd(a, b) != 1) continue;
        ++t;
        CHECK(sigma(a * b) == sigma(a) * sigma(b));
    }
}

TEST_CASE("congruence root counts on pinned cases") {
    CHECK(count_congruence_roots(CongruenceKind::ZSqMinusZPlus1, 3, 1) == 1);
    CHECK(count_congruence_roots(CongruenceKind::ZSqMinusZPlus1, 3, 2) == 0);
    CHECK(count_congruence_roots(CongruenceKind::ZSqMinusZPlus1, 7, 1) == 2);
    CHECK(count_congruence_roots(CongruenceKind::ZSqMinusZPlus1, 5, 3) == 0);
    CHECK(count_congruence_roots(CongruenceKind::ZSqPlus1, 2, 1) == 1);
    CHECK(count_congruence_roots(CongruenceKind::ZSqPlus1, 2, 3) == 0);
    CHECK(count_congruence_roots(CongruenceKind::ZSqPlus1, 5, 2) == 2);
    // p == 3 mod 4 has no square root of -1 mod p^beta for any beta >= 1,
    // even when p^beta == 1 mod 4.
    CHECK(count_congruence_roots(CongruenceKind::ZSqPlus1, 3, 2) == 0);
    CHECK(count_congruence_roots(CongruenceKind::ZSqPlus1, 7, 2) == 0);
    // beta = 0: trivial ring
    CHECK(count_congruence_roots(CongruenceKind::ZSqMinusZPlus1, 11, 0) == 1);
    CHECK(count_congruence_roots(CongruenceKind::ZSqPlus1, 11, 0) == 1);
    CHECK_THROWS_AS(count_congruence_roots(CongruenceKind::ZSqPlus1, 6, 1),
                    std::invalid_argument);
}

TEST_CASE("congruence root values from direct substitution") {
    CHECK(congruence_roots(CongruenceKind::ZSqMinusZPlus1, 7, 1) ==
          std::vector<std::uint64_t>{3, 5});
    CHECK(congruence_roots(CongruenceKind::ZSqMinusZPlus1, 7, 2) ==
          std::vector<std::uint64_t>{19, 31});
    CHECK(congruence_roots(CongruenceKind::ZSqMinusZPlus1, 3, 1) ==
          std::vector<std::uint64_t>{2});
    CHECK(congruence_roots(CongruenceKind::ZSqPlus1, 5, 2) ==
          std::vector<std::uint64_t>{7, 18});
    CHECK(congruence_roots(CongruenceKind::ZSqPlus1, 2, 1) == std::vector<std::uint64_t>{1});
    CHECK(congruence_roots(CongruenceKind::ZSqPlus1, 13, 1) ==
          std::vector<std::uint64_t>{5, 8});
}

TEST_CASE("closed-form root counts match exhaustive scans to 2000") {
    for (std::uint64_t p = 2; p <= 2000; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned beta = 1; pow_u64(p, beta) <= 2000; ++beta) {
            for (CongruenceKind kind :
                 {CongruenceKind::ZSqMinusZPlus1, CongruenceKind::ZSqPlus1}) {
                CHECK(congruence_roots(kind, p, beta).size() ==
                      count_congruence_roots(kind, p, beta));
            }
        }
    }
}

TEST_CASE("crt_combine") {
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> one{{2, 3}};
    CHECK(crt_combine(one) == 2);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> two{{2, 3}, {3, 5}};
    CHECK(crt_combine(two) == 8);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> three{{1, 4}, {2, 9}, {3, 25}};
    const std::uint64_t x = crt_combine(three);
    CHECK(x % 4 == 1);
    CHECK(x % 9 == 2);
    CHECK(x % 25 == 3);
    CHECK(x < 900);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> none{};
    CHECK(crt_combine(none) == 0);
}
