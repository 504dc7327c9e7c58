#pragma once

// Exact integer and modular arithmetic: factorization, the divisor-sum
// function sigma, CRT recombination, and root counts of the two quadratic
// congruences z^2 - z + 1 and z^2 + 1 modulo prime powers.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace galocus {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted ascending by prime; empty for m = 1.
using Factorization = std::vector<PrimePower>;

bool is_prime(std::uint64_t n);

// p^e with overflow check; throws std::overflow_error if it does not fit.
std::uint64_t pow_u64(std::uint64_t p, unsigned e);

// Deterministic trial division. Throws std::invalid_argument on m = 0.
Factorization factorize(std::uint64_t m);

// Sum of the positive divisors of m, computed multiplicatively as
// prod (p^(a+1) - 1) / (p - 1). Throws std::invalid_argument on m = 0.
std::uint64_t sigma(std::uint64_t m);

enum class CongruenceKind {
    ZSqMinusZPlus1,  // z^2 - z + 1 == 0
    ZSqPlus1,        // z^2 + 1 == 0
};

// Number of roots of the chosen congruence in Z/p^beta Z.
//
// beta = 0 is the trivial ring: exactly one residue, which is a root.
// For z^2 - z + 1: 1 if p = 3 and beta = 1; 0 if p = 3 and beta > 1 or
// p == 2 mod 3; 2 if p == 1 mod 3.
// For z^2 + 1: 1 if p = 2 and beta = 1; 0 if p = 2 and beta > 1;
// 2 if p == 1 mod 4; 0 if p == 3 mod 4. (Solvability depends on p mod 4
// alone: a square root of -1 mod p^beta exists iff it exists mod p.)
//
// Throws std::invalid_argument if p is not prime.
unsigned count_congruence_roots(CongruenceKind kind, std::uint64_t p, unsigned beta);

// The roots themselves, by exhaustive scan of Z/p^beta Z, sorted ascending.
// Intended for small prime powers (the constructive enumeration bound).
std::vector<std::uint64_t> congruence_roots(CongruenceKind kind, std::uint64_t p,
                                            unsigned beta);

// Inverse of a mod `mod` by extended Euclid; throws std::invalid_argument
// when gcd(a, mod) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod);

// x == r_k mod m_k for pairwise coprime moduli; returns the unique solution
// mod prod m_k. An empty input yields 0 (modulus 1).
std::uint64_t crt_combine(std::span<const std::pair<std::uint64_t, std::uint64_t>> residue_modulus);

}  // namespace galocus
