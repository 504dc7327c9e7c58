#pragma once

// psi_ell(E, m): the number of xi-stable order-m subgroups of E[m] for an
// origin-fixing automorphism xi of order ell, computed three independent
// ways: closed form, constructive S_{x,i} enumeration through the stability
// congruences, and the closure oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "galocus/torsion.hpp"

namespace galocus {

// Which automorphism orders a curve class admits:
// generic j has Aut_0 = {+-1}; j = 0 has the order-6 automorphisms;
// j = 1728 has the order-4 ones.
enum class JClass { Generic, J0, J1728 };

bool is_admissible(JClass j, int ell);

// "generic" / "0" / "1728"
std::string j_class_name(JClass j);
JClass parse_j_class(const std::string& label);

// Closed-form count of stable order-p^alpha subgroups of (Z/p^alpha Z)^2:
//   ell = 2: sigma(p^alpha)
//   ell in {3,6}: 1 for p = 3; alpha+1 for p == 1 mod 3;
//                 1 for even alpha and 0 for odd alpha when p == 2 mod 3
//   ell = 4: 1 for p = 2; alpha+1 for p == 1 mod 4;
//            1 for even alpha and 0 for odd alpha when p == 3 mod 4
// alpha = 0 gives 1. The counts are the column sums of the congruence-root
// counts over 2i <= alpha; each value is cross-checked against the
// enumeration and the closure oracle in the test suites.
std::uint64_t psi_prime_power(int ell, std::uint64_t p, unsigned alpha);

// 0 when ell is not admissible for j; otherwise multiplicative over the
// factorization of m.
std::uint64_t psi(int ell, JClass j, std::uint64_t m);

// All xi-stable order-m subgroups, built per prime power from the stability
// criterion: S_{x,i} is stable iff 2i <= alpha and x = p^i y for a root y of
// the ell-appropriate congruence mod p^(alpha-2i) (no condition for ell = 2,
// z^2-z+1 for ell in {3,6}, z^2+1 for ell = 4). Combined across primes by
// CRT; lexicographic (prime, i, x) order. Throws above `bound`.
std::vector<TorsionSubgroup> enumerate_stable_subgroups(
    int ell, std::uint64_t m, std::uint64_t bound = kDefaultConstructiveBound);

// Count of closure-oracle subgroups passing is_stable.
std::uint64_t stable_count_oracle(int ell, std::uint64_t m,
                                  std::uint64_t oracle_bound = kDefaultOracleBound);

}  // namespace galocus
