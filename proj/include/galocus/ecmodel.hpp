#pragma once

// Executable witness over a concrete elliptic curve E(F_p), p >= 5:
// y^2 = x^3 + ax + b with the origin-fixing automorphisms of its j-class,
// the affine maps mu_{xi,q}(x) = xi x + q, the endomorphisms eps_{xi,m},
// and the divisor-sum / group-equality identities checked on actual points.
//
// Desk scale by design: points are enumerated exhaustively, so p should stay
// small (a few thousand at most).

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "galocus/stable_count.hpp"

namespace galocus {

struct CurvePoint {
    bool at_infinity = true;
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    static CurvePoint infinity() { return {}; }
    static CurvePoint affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
        // infinity sorts first
        if (a.at_infinity != b.at_infinity) return b.at_infinity <=> a.at_infinity;
        if (a.x != b.x) return a.x <=> b.x;
        return a.y <=> b.y;
    }
};

class CurveModel {
public:
    // Requires p prime >= 5 and 4a^3 + 27b^2 != 0 mod p. The j-class is
    // inferred: a = 0 -> J0 (needs p == 1 mod 3 for the cube root of unity),
    // b = 0 -> J1728 (needs p == 1 mod 4), otherwise generic. All rational
    // points are enumerated eagerly.
    CurveModel(std::uint64_t p, std::uint64_t a, std::uint64_t b);

    std::uint64_t p() const { return p_; }
    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    JClass j_class() const { return j_; }

    // The field element realizing the extra automorphism: a primitive cube
    // root of unity for J0, a primitive fourth root for J1728 (smallest
    // such residue). Throws for generic curves.
    std::uint64_t zeta() const;

    bool contains(const CurvePoint& pt) const;

    // Group law with identity at infinity; operands are validated.
    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint negate(const CurvePoint& P) const;
    CurvePoint sub(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint scalar_mul(std::int64_t k, const CurvePoint& P) const;

    // xi of order ell: ell=2 -> (x,-y); J0: ell=3 -> (zx, y), ell=6 ->
    // (zx, -y); J1728: ell=4 -> (-x, zy). Throws for inadmissible ell.
    CurvePoint apply_aut(int ell, const CurvePoint& P) const;
    CurvePoint apply_aut_pow(int ell, unsigned i, const CurvePoint& P) const;

    // mu_{xi,q}(P) = xi P + q
    CurvePoint mu(int ell, const CurvePoint& q, const CurvePoint& P) const;

    // eps_{xi,m}(q): mq, m(2+xi)q, 2m(1+xi)q, 6m xi q for ell = 2,3,4,6.
    CurvePoint epsilon_apply(int ell, std::uint64_t m, const CurvePoint& q) const;

    // All rational points, infinity first, then ascending (x, y).
    const std::vector<CurvePoint>& points() const { return points_; }
    std::uint64_t group_order() const { return points_.size(); }

    std::vector<CurvePoint> m_torsion(std::uint64_t m) const;

    // Points generating E[m] = Z/m x Z/m; requires all m^2 m-torsion points
    // rational (checked; throws otherwise). Verified by spanning m^2
    // distinct combinations. Deterministic.
    std::pair<CurvePoint, CurvePoint> torsion_basis(std::uint64_t m) const;

    // True when the restrictions of xi^0..xi^(ell-1) to E(F_p) are pairwise
    // distinct; map-set comparisons are only faithful in that case.
    bool aut_acts_faithfully(int ell) const;

private:
    std::uint64_t p_, a_, b_;
    JClass j_;
    std::optional<std::uint64_t> zeta_;
    std::vector<CurvePoint> points_;
};

bool is_point_subgroup(const CurveModel& E, std::span<const CurvePoint> H);
bool is_aut_stable(const CurveModel& E, int ell, std::span<const CurvePoint> H);

// Lemma check: the sum of g(0) over g in G_{H,xi,q} equals eps_{xi,|H|}(q).
// H must be a xi-stable subgroup (validated). Also asserts the multiset
// {g(0)} has ell * |H| entries.
bool divisor_sum_check(const CurveModel& E, int ell, std::span<const CurvePoint> H,
                       const CurvePoint& q);

// Lemma check: G_{H,xi,q} = G_{H,xi,q2} as sets of maps iff q - q2 in H.
// Maps are compared by their full graphs on E(F_p); the biconditional
// against the membership test is asserted internally (std::logic_error on
// violation) and the map-set equality is returned.
bool group_equality_check(const CurveModel& E, int ell, std::span<const CurvePoint> H,
                          const CurvePoint& q, const CurvePoint& q2);

// All order-m subgroups of the rational E[m] that are stable under xi,
// as sorted point sets. Requires full rational m-torsion.
std::vector<std::vector<CurvePoint>> stable_point_subgroups(const CurveModel& E, int ell,
                                                            std::uint64_t m);

// Deterministic search for a witness curve of the given class with full
// rational m-torsion and faithful automorphism action on E(F_p).
std::optional<CurveModel> find_curve_with_full_torsion(JClass j, std::uint64_t m,
                                                       std::uint64_t max_p = 500);

}  // namespace galocus
