#include "galocus/ecmodel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace galocus {

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mod_mul(r, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    return mod_pow(a, p - 2, p);  // p prime, a != 0
}

std::uint64_t rhs_of(std::uint64_t x, std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (mod_mul(mod_mul(x, x, p), x, p) + mod_mul(a, x, p) + b) % p;
}

}  // namespace

CurveModel::CurveModel(std::uint64_t p, std::uint64_t a, std::uint64_t b)
    : p_(p), a_(a % p), b_(b % p) {
    if (!is_prime(p) || p < 5) {
        throw std::invalid_argument("CurveModel: p must be a prime >= 5");
    }
    const std::uint64_t disc =
        (4 * mod_mul(mod_mul(a_, a_, p), a_, p) % p + 27 * mod_mul(b_, b_, p) % p) % p;
    if (disc == 0) throw std::invalid_argument("CurveModel: singular curve");

    if (a_ == 0) {
        j_ = JClass::J0;
        if (p % 3 != 1) {
            throw std::invalid_argument("CurveModel: j = 0 needs p == 1 mod 3");
        }
        for (std::uint64_t z = 2; z < p; ++z) {
            if (mod_pow(z, 3, p) == 1) {
                zeta_ = z;
                break;
            }
        }
    } else if (b_ == 0) {
        j_ = JClass::J1728;
        if (p % 4 != 1) {
            throw std::invalid_argument("CurveModel: j = 1728 needs p == 1 mod 4");
        }
        for (std::uint64_t z = 2; z < p; ++z) {
            if (mod_mul(z, z, p) == p - 1) {
                zeta_ = z;
                break;
            }
        }
    } else {
        j_ = JClass::Generic;
    }

    // Exhaustive point enumeration via a square-root table.
    std::vector<std::vector<std::uint64_t>> sqrt_of(p);
    for (std::uint64_t y = 0; y < p; ++y) sqrt_of[mod_mul(y, y, p)].push_back(y);
    points_.push_back(CurvePoint::infinity());
    for (std::uint64_t x = 0; x < p; ++x) {
        for (std::uint64_t y : sqrt_of[rhs_of(x, a_, b_, p)]) {
            points_.push_back(CurvePoint::affine(x, y));
        }
    }
}

std::uint64_t CurveModel::zeta() const {
    if (!zeta_) throw std::invalid_argument("zeta: generic curves have no extra automorphism");
    return *zeta_;
}

bool CurveModel::contains(const CurvePoint& pt) const {
    if (pt.at_infinity) return true;
    if (pt.x >= p_ || pt.y >= p_) return false;
    return mod_mul(pt.y, pt.y, p_) == rhs_of(pt.x, a_, b_, p_);
}

CurvePoint CurveModel::add(const CurvePoint& P, const CurvePoint& Q) const {
    if (!contains(P) || !contains(Q)) throw std::invalid_argument("add: point not on curve");
    if (P.at_infinity) return Q;
    if (Q.at_infinity) return P;
    if (P.x == Q.x && (P.y + Q.y) % p_ == 0) return CurvePoint::infinity();
    std::uint64_t lambda;
    if (P == Q) {
        lambda = mod_mul((3 * mod_mul(P.x, P.x, p_) + a_) % p_, mod_inv(2 * P.y % p_, p_), p_);
    } else {
        lambda = mod_mul((Q.y + p_ - P.y) % p_, mod_inv((Q.x + p_ - P.x) % p_, p_), p_);
    }
    const std::uint64_t x3 = (mod_mul(lambda, lambda, p_) + 2 * p_ - P.x - Q.x) % p_;
    const std::uint64_t y3 = (mod_mul(lambda, (P.x + p_ - x3) % p_, p_) + p_ - P.y) % p_;
    return CurvePoint::affine(x3, y3);
}

CurvePoint CurveModel::negate(const CurvePoint& P) const {
    if (!contains(P)) throw std::invalid_argument("negate: point not on curve");
    if (P.at_infinity) return P;
    return CurvePoint::affine(P.x, (p_ - P.y) % p_);
}

CurvePoint CurveModel::sub(const CurvePoint& P, const CurvePoint& Q) const {
    return add(P, negate(Q));
}

CurvePoint CurveModel::scalar_mul(std::int64_t k, const CurvePoint& P) const {
    if (!contains(P)) throw std::invalid_argument("scalar_mul: point not on curve");
    CurvePoint base = k < 0 ? negate(P) : P;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    CurvePoint acc = CurvePoint::infinity();
    while (n) {
        if (n & 1) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

CurvePoint CurveModel::apply_aut(int ell, const CurvePoint& P) const {
    if (!is_admissible(j_, ell)) {
        throw std::invalid_argument("apply_aut: ell = " + std::to_string(ell) +
                                    " is not admissible for this j-class");
    }
    if (!contains(P)) throw std::invalid_argument("apply_aut: point not on curve");
    if (P.at_infinity) return P;
    switch (ell) {
        case 2: return CurvePoint::affine(P.x, (p_ - P.y) % p_);
        case 3: return CurvePoint::affine(mod_mul(zeta(), P.x, p_), P.y);
        case 6: return CurvePoint::affine(mod_mul(zeta(), P.x, p_), (p_ - P.y) % p_);
        case 4: return CurvePoint::affine((p_ - P.x) % p_, mod_mul(zeta(), P.y, p_));
    }
    throw std::invalid_argument("apply_aut: ell must be one of {2,3,4,6}");
}

CurvePoint CurveModel::apply_aut_pow(int ell, unsigned i, const CurvePoint& P) const {
    CurvePoint out = P;
    for (unsigned k = 0; k < i % static_cast<unsigned>(ell); ++k) out = apply_aut(ell, out);
    return out;
}

CurvePoint CurveModel::mu(int ell, const CurvePoint& q, const CurvePoint& P) const {
    return add(apply_aut(ell, P), q);
}

CurvePoint CurveModel::epsilon_apply(int ell, std::uint64_t m, const CurvePoint& q) const {
    if (m == 0) throw std::invalid_argument("epsilon_apply: m must be positive");
    const std::int64_t mm = static_cast<std::int64_t>(m);
    switch (ell) {
        case 2: return scalar_mul(mm, q);
        case 3: return add(scalar_mul(2 * mm, q), scalar_mul(mm, apply_aut(3, q)));
        case 4: return add(scalar_mul(2 * mm, q), scalar_mul(2 * mm, apply_aut(4, q)));
        case 6: return scalar_mul(6 * mm, apply_aut(6, q));
    }
    throw std::invalid_argument("epsilon_apply: ell must be one of {2,3,4,6}");
}

std::vector<CurvePoint> CurveModel::m_torsion(std::uint64_t m) const {
    if (m == 0) throw std::invalid_argument("m_torsion: m must be positive");
    std::vector<CurvePoint> out;
    for (const auto& P : points_) {
        if (scalar_mul(static_cast<std::int64_t>(m), P).at_infinity) out.push_back(P);
    }
    return out;
}

std::pair<CurvePoint, CurvePoint> CurveModel::torsion_basis(std::uint64_t m) const {
    if (m == 0) throw std::invalid_argument("torsion_basis: m must be positive");
    if (m == 1) return {CurvePoint::infinity(), CurvePoint::infinity()};
    const std::vector<CurvePoint> torsion = m_torsion(m);
    if (torsion.size() != m * m) {
        throw std::invalid_argument("torsion_basis: full m-torsion is not rational (found " +
                                    std::to_string(torsion.size()) + " of " +
                                    std::to_string(m * m) + " points)");
    }
    auto order_in_torsion = [&](const CurvePoint& P) {
        for (std::uint64_t d = 1; d <= m; ++d) {
            if (m % d == 0 && scalar_mul(static_cast<std::int64_t>(d), P).at_infinity) return d;
        }
        return m;
    };
    for (const auto& P1 : torsion) {
        if (order_in_torsion(P1) != m) continue;
        for (const auto& P2 : torsion) {
            std::set<CurvePoint> span;
            CurvePoint rowP = CurvePoint::infinity();
            for (std::uint64_t i = 0; i < m; ++i) {
                CurvePoint cur = rowP;
                for (std::uint64_t k = 0; k < m; ++k) {
                    span.insert(cur);
                    cur = add(cur, P2);
                }
                rowP = add(rowP, P1);
            }
            if (span.size() == m * m) return {P1, P2};
        }
    }
    throw std::logic_error("torsion_basis: no basis found in full m-torsion");
}

bool CurveModel::aut_acts_faithfully(int ell) const {
    std::set<std::vector<CurvePoint>> graphs;
    for (int i = 0; i < ell; ++i) {
        std::vector<CurvePoint> graph;
        graph.reserve(points_.size());
        for (const auto& P : points_) {
            graph.push_back(apply_aut_pow(ell, static_cast<unsigned>(i), P));
        }
        graphs.insert(std::move(graph));
    }
    return graphs.size() == static_cast<std::size_t>(ell);
}

bool is_point_subgroup(const CurveModel& E, std::span<const CurvePoint> H) {
    std::set<CurvePoint> set(H.begin(), H.end());
    if (set.size() != H.size()) return false;
    if (!set.count(CurvePoint::infinity())) return false;
    for (const auto& P : H) {
        if (!E.contains(P)) return false;
        if (!set.count(E.negate(P))) return false;
        for (const auto& Q : H) {
            if (!set.count(E.add(P, Q))) return false;
        }
    }
    return true;
}

bool is_aut_stable(const CurveModel& E, int ell, std::span<const CurvePoint> H) {
    std::set<CurvePoint> set(H.begin(), H.end());
    for (const auto& P : H) {
        if (!set.count(E.apply_aut(ell, P))) return false;
    }
    return true;
}

namespace {

void require_stable_subgroup(const CurveModel& E, int ell, std::span<const CurvePoint> H) {
    if (!is_point_subgroup(E, H)) {
        throw std::invalid_argument("H is not a subgroup of E(F_p)");
    }
    if (!is_aut_stable(E, ell, H)) {
        throw std::invalid_argument("H is not xi-stable");
    }
}

// tau_i(q) = (xi^i - 1)/(xi - 1) q = q + xi q + ... + xi^(i-1) q, tau_0 = 0.
std::vector<CurvePoint> partial_orbit_sums(const CurveModel& E, int ell, const CurvePoint& q) {
    std::vector<CurvePoint> tau{CurvePoint::infinity()};
    CurvePoint rotated = q;
    for (int i = 1; i < ell; ++i) {
        tau.push_back(E.add(tau.back(), rotated));
        rotated = E.apply_aut(ell, rotated);
    }
    return tau;
}

}  // namespace

bool divisor_sum_check(const CurveModel& E, int ell, std::span<const CurvePoint> H,
                       const CurvePoint& q) {
    require_stable_subgroup(E, ell, H);
    if (!E.contains(q)) throw std::invalid_argument("divisor_sum_check: q not on curve");

    const std::vector<CurvePoint> tau = partial_orbit_sums(E, ell, q);
    CurvePoint total = CurvePoint::infinity();
    std::size_t entries = 0;
    for (int i = 0; i < ell; ++i) {
        for (const auto& h : H) {
            // g = mu^i t_h sends the origin to xi^i h + tau_i(q).
            total = E.add(total, E.add(E.apply_aut_pow(ell, static_cast<unsigned>(i), h), tau[i]));
            ++entries;
        }
    }
    if (entries != static_cast<std::size_t>(ell) * H.size()) {
        throw std::logic_error("divisor_sum_check: |G| != ell * |H|");
    }
    return total == E.epsilon_apply(ell, H.size(), q);
}

namespace {

// Graph of g = mu_{xi,q}^i t_h on all rational points: g(P) = xi^i(P+h) + tau_i(q).
std::set<std::vector<CurvePoint>> group_graphs(const CurveModel& E, int ell,
                                               std::span<const CurvePoint> H,
                                               const CurvePoint& q) {
    const std::vector<CurvePoint> tau = partial_orbit_sums(E, ell, q);
    std::set<std::vector<CurvePoint>> graphs;
    for (int i = 0; i < ell; ++i) {
        for (const auto& h : H) {
            std::vector<CurvePoint> graph;
            graph.reserve(E.points().size());
            for (const auto& P : E.points()) {
                graph.push_back(E.add(
                    E.apply_aut_pow(ell, static_cast<unsigned>(i), E.add(P, h)), tau[i]));
            }
            graphs.insert(std::move(graph));
        }
    }
    return graphs;
}

}  // namespace

bool group_equality_check(const CurveModel& E, int ell, std::span<const CurvePoint> H,
                          const CurvePoint& q, const CurvePoint& q2) {
    require_stable_subgroup(E, ell, H);
    if (!E.contains(q) || !E.contains(q2)) {
        throw std::invalid_argument("group_equality_check: point not on curve");
    }
    if (!E.aut_acts_faithfully(ell)) {
        throw std::invalid_argument(
            "group_equality_check: xi powers are not distinct on E(F_p); curve too small");
    }

    const auto graphs_q = group_graphs(E, ell, H, q);
    const auto graphs_q2 = group_graphs(E, ell, H, q2);
    if (graphs_q.size() != static_cast<std::size_t>(ell) * H.size() ||
        graphs_q2.size() != static_cast<std::size_t>(ell) * H.size()) {
        throw std::logic_error("group_equality_check: group does not have ell * |H| maps");
    }
    const bool maps_equal = graphs_q == graphs_q2;

    const CurvePoint diff = E.sub(q, q2);
    const bool diff_in_h = std::find(H.begin(), H.end(), diff) != H.end();
    if (maps_equal != diff_in_h) {
        throw std::logic_error("group_equality_check: biconditional violated");
    }
    return maps_equal;
}

std::vector<std::vector<CurvePoint>> stable_point_subgroups(const CurveModel& E, int ell,
                                                            std::uint64_t m) {
    const auto [P1, P2] = E.torsion_basis(m);
    std::vector<std::vector<CurvePoint>> out;
    for (const auto& coords : enumerate_order_m_subgroups(m)) {
        std::vector<CurvePoint> points;
        points.reserve(coords.elements().size());
        for (const auto& [u, v] : coords.elements()) {
            points.push_back(E.add(E.scalar_mul(static_cast<std::int64_t>(u), P1),
                                   E.scalar_mul(static_cast<std::int64_t>(v), P2)));
        }
        std::sort(points.begin(), points.end());
        if (is_aut_stable(E, ell, points)) out.push_back(std::move(points));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CurveModel> find_curve_with_full_torsion(JClass j, std::uint64_t m,
                                                       std::uint64_t max_p) {
    auto full_torsion_and_faithful = [&](const CurveModel& E) {
        if (E.m_torsion(m).size() != m * m) return false;
        for (int ell : kAutOrders) {
            if (is_admissible(j, ell) && !E.aut_acts_faithfully(ell)) return false;
        }
        return true;
    };
    for (std::uint64_t p = 5; p <= max_p; ++p) {
        if (!is_prime(p)) continue;
        if (j == JClass::J0 && p % 3 != 1) continue;
        if (j == JClass::J1728 && p % 4 != 1) continue;
        for (std::uint64_t c = 1; c < p; ++c) {
            std::uint64_t a = 0, b = 0;
            switch (j) {
                case JClass::J0: a = 0, b = c; break;
                case JClass::J1728: a = c, b = 0; break;
                case JClass::Generic: a = c, b = 1; break;
            }
            const std::uint64_t disc =
                (4 * mod_mul(mod_mul(a, a, p), a, p) % p + 27 * mod_mul(b, b, p) % p) % p;
            if (disc == 0) continue;
            CurveModel E(p, a, b);
            if (full_torsion_and_faithful(E)) return E;
        }
    }
    return std::nullopt;
}

}  // namespace galocus
