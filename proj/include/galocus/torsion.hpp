#pragma once

// The m-torsion group E[m] ~ (Z/mZ)^2 with its order-ell automorphism
// actions, canonical subgroup representations in the S_{x,i} family
//   S_{x,i} = <(p^i, x), (0, p^(alpha-i))>,   0 <= i <= alpha, 0 <= x < p^(alpha-i),
// and the closure-based brute-force enumerator used as the oracle against
// all closed-form counts.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galocus/modarith.hpp"

namespace galocus {

inline constexpr std::uint64_t kDefaultOracleBound = 12;
inline constexpr std::uint64_t kDefaultConstructiveBound = 500;

inline constexpr std::array<int, 4> kAutOrders{2, 3, 4, 6};

using TorsionPair = std::pair<std::uint64_t, std::uint64_t>;

// Sorted, duplicate-free element list; the canonical identity of a subgroup.
using Fingerprint = std::vector<TorsionPair>;

// Fixed integer matrix of the order-ell automorphism in the reference basis:
// ell=2 -> -I, ell=3 -> [[0,-1],[1,-1]], ell=4 -> [[0,-1],[1,0]],
// ell=6 -> [[0,1],[-1,1]] (the negative of the order-3 matrix).
std::array<std::array<std::int64_t, 2>, 2> aut_matrix(int ell);

struct AutAction {
    int ell = 2;
    std::uint64_t modulus = 1;
    std::array<std::array<std::uint64_t, 2>, 2> matrix{};  // entries reduced mod m

    TorsionPair apply(TorsionPair v) const;
};

// Throws std::invalid_argument unless ell is one of {2,3,4,6} and m >= 1.
AutAction aut_action(int ell, std::uint64_t m);

// Additive closure of the generators inside (Z/mZ)^2, as a fingerprint.
Fingerprint subgroup_closure(std::uint64_t m, std::span<const TorsionPair> gens);

struct PrimeComponent {
    std::uint64_t prime = 0;
    unsigned alpha = 0;   // p^alpha exactly divides the modulus
    unsigned i = 0;       // 0 <= i <= alpha
    std::uint64_t x = 0;  // 0 <= x < p^(alpha-i)

    friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

struct CanonicalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An order-m subgroup of (Z/mZ)^2 in canonical form. Identity of a subgroup
// is its element fingerprint; the per-prime (i, x) coordinates are
// basis-dependent bookkeeping recovered by CRT-splitting.
class TorsionSubgroup {
public:
    // Closure of `gens`; throws CanonicalizationError if the generated
    // subgroup does not have order m.
    static TorsionSubgroup from_generators(std::uint64_t m, std::span<const TorsionPair> gens);

    // Direct construction from per-prime S_{x,i} data (one component per
    // prime of m, sorted by prime). Throws std::invalid_argument on
    // out-of-range data.
    static TorsionSubgroup from_components(std::uint64_t m, std::vector<PrimeComponent> components);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return elements_.size(); }
    const std::vector<PrimeComponent>& components() const { return components_; }
    const Fingerprint& elements() const { return elements_; }

    bool contains(TorsionPair v) const;

    // The CRT-combined pair (g1, g2) with per-prime parts
    // (p^i, x) and (0, p^(alpha-i)); it generates the subgroup.
    std::array<TorsionPair, 2> canonical_generators() const;

    friend bool operator==(const TorsionSubgroup& a, const TorsionSubgroup& b) {
        return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
    }
    friend std::strong_ordering operator<=>(const TorsionSubgroup& a, const TorsionSubgroup& b) {
        return a.elements_ <=> b.elements_;
    }

private:
    TorsionSubgroup() = default;

    std::uint64_t modulus_ = 1;
    std::vector<PrimeComponent> components_;
    Fingerprint elements_;
};

// True iff A maps S into S (equivalently A*S = S, A being invertible).
// Checks every element of the fingerprint. Throws on modulus mismatch.
bool is_stable(const TorsionSubgroup& s, const AutAction& a);

// Brute-force oracle: closures of all ordered generator pairs in
// ((Z/mZ)^2)^2, deduplicated by fingerprint, filtered to order exactly m,
// sorted by fingerprint. Cost grows as m^4 closures; throws
// std::invalid_argument above `oracle_bound`.
std::vector<TorsionSubgroup> closure_oracle_enumerate(
    std::uint64_t m, std::uint64_t oracle_bound = kDefaultOracleBound);

// All order-m subgroups straight from the S_{x,i} parametrization, combined
// across primes by CRT, in lexicographic (prime, i, x) order. There are
// sigma(m) of them.
std::vector<TorsionSubgroup> enumerate_order_m_subgroups(std::uint64_t m);

}  // namespace galocus
