#pragma once

// Verification suites shared by the CLI `verify` command and the acceptance
// driver: oracle equivalence, closed-form agreement, multiplicativity,
// golden census cells, coefficient identities, and the finite-field witness.

#include <cstdint>
#include <string>
#include <vector>

namespace galocus {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // diagnostic for failures, summary for passes
};

// Frozen psi reference values; `corrupt` deliberately breaks one entry so
// that the failure path is testable.
CheckResult check_psi_reference_table(bool corrupt);

// sigma against a divisor-sum sieve for all m <= max_m.
CheckResult check_sigma_brute_force(std::uint64_t max_m);

// Closed-form congruence-root counts against exhaustive residue scans for
// all prime powers p^beta <= max_prime_power, both congruence kinds.
CheckResult check_congruence_roots(std::uint64_t max_prime_power);

// Closure oracle vs constructive enumeration vs closed form, counts and
// fingerprint sets, every ell, every m <= max_m. Also: the unstable-count
// identity |all order-m subgroups| = sigma(m) with oracle/constructive set
// equality.
CheckResult check_oracle_equivalence(std::uint64_t max_m);

// psi == |enumerate_stable_subgroups| for all m <= max_m and all ell, with
// every enumerated subgroup re-validated through is_stable, and the ell=3 /
// ell=6 enumerations compared.
CheckResult check_constructive_agreement(std::uint64_t max_m);

// psi_2 = sigma and psi_3 = psi_6 for all m <= max_m.
CheckResult check_psi_identities(std::uint64_t max_m);

// psi(ab) == psi(a) psi(b) for `pairs` random coprime pairs with
// a*b <= max_product, all ell. Deterministic under `seed`.
CheckResult check_multiplicativity(unsigned pairs, std::uint64_t max_product, std::uint64_t seed);

// Census cells for N in {2,3,4,5} x {generic, 0, 1728} against the frozen
// reference values, including totals.
CheckResult check_table1();

// deg eps determinants against m^2, 3m^2, 8m^2, 36m^2 and the q-class
// counts against n/2, n, 2n, 6n for all n <= max_n with ell | n.
CheckResult check_coefficient_identity(std::uint64_t max_n);

// Generic-j census formulas: ((N+1)/2) sigma((N+1)/2) 0-dimensional
// components for odd N, sigma(s/2) components of dimension N+1-s for even
// s, zeros for the complementary parities, for all N <= max_N.
CheckResult check_intro_theorem(std::uint64_t max_N);

// Structural census invariants for all j and 3 <= n <= max_n: the
// dimension-0 count equals disjoint_count equals the inventory total,
// bundle dimensions close up, constituent sums match, parity vanishing for
// generic j.
CheckResult check_census_consistency(std::uint64_t max_n);

// Finite-field witness: curves with full rational m-torsion, stable
// subgroup counts against psi, divisor-sum and group-equality identities on
// `configs` random configurations per (curve, ell), and eps kernel counts
// against deg eps.
CheckResult check_curve_witness(unsigned configs, std::uint64_t seed);

struct VerifyOptions {
    std::uint64_t oracle_max = 12;
    std::uint64_t constructive_max = 500;
    bool with_curves = false;
    bool inject_fault = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace galocus
