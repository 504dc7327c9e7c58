#include "galocus/stable_count.hpp"

#include <stdexcept>

namespace galocus {

namespace {

void require_ell(int ell) {
    if (ell != 2 && ell != 3 && ell != 4 && ell != 6) {
        throw std::invalid_argument("ell must be one of {2,3,4,6}");
    }
}

}  // namespace

bool is_admissible(JClass j, int ell) {
    require_ell(ell);
    switch (j) {
        case JClass::Generic: return ell == 2;
        case JClass::J0: return ell == 2 || ell == 3 || ell == 6;
        case JClass::J1728: return ell == 2 || ell == 4;
    }
    return false;
}

std::string j_class_name(JClass j) {
    switch (j) {
        case JClass::Generic: return "generic";
        case JClass::J0: return "0";
        case JClass::J1728: return "1728";
    }
    throw std::invalid_argument("j_class_name: bad JClass");
}

JClass parse_j_class(const std::string& label) {
    if (label == "generic") return JClass::Generic;
    if (label == "0") return JClass::J0;
    if (label == "1728") return JClass::J1728;
    throw std::invalid_argument("j must be one of generic, 0, 1728");
}

std::uint64_t psi_prime_power(int ell, std::uint64_t p, unsigned alpha) {
    require_ell(ell);
    if (!is_prime(p)) throw std::invalid_argument("psi_prime_power: p must be prime");
    if (alpha == 0) return 1;
    switch (ell) {
        case 2:
            return sigma(pow_u64(p, alpha));
        case 3:
        case 6:
            if (p == 3) return 1;
            if (p % 3 == 1) return alpha + 1;
            return alpha % 2 == 0 ? 1 : 0;
        case 4:
            if (p == 2) return 1;
            if (p % 4 == 1) return alpha + 1;
            return alpha % 2 == 0 ? 1 : 0;
    }
    return 0;
}

std::uint64_t psi(int ell, JClass j, std::uint64_t m) {
    require_ell(ell);
    if (m == 0) throw std::invalid_argument("psi: m must be positive");
    if (!is_admissible(j, ell)) return 0;
    std::uint64_t out = 1;
    for (const auto& [p, alpha] : factorize(m)) {
        out *= psi_prime_power(ell, p, alpha);
        if (out == 0) return 0;
    }
    return out;
}

std::vector<TorsionSubgroup> enumerate_stable_subgroups(int ell, std::uint64_t m,
                                                        std::uint64_t bound) {
    require_ell(ell);
    if (m == 0) throw std::invalid_argument("enumerate_stable_subgroups: m must be positive");
    if (m > bound) {
        throw std::invalid_argument("enumerate_stable_subgroups: m exceeds the bound " +
                                    std::to_string(bound));
    }

    const Factorization factors = factorize(m);
    std::vector<std::vector<PrimeComponent>> per_prime;
    for (const auto& [p, alpha] : factors) {
        std::vector<PrimeComponent> comps;
        if (ell == 2) {
            // Every subgroup is stable under negation.
            for (unsigned i = 0; i <= alpha; ++i) {
                const std::uint64_t xmax = pow_u64(p, alpha - i);
                for (std::uint64_t x = 0; x < xmax; ++x) comps.push_back({p, alpha, i, x});
            }
        } else {
            const CongruenceKind kind =
                ell == 4 ? CongruenceKind::ZSqPlus1 : CongruenceKind::ZSqMinusZPlus1;
            for (unsigned i = 0; 2 * i <= alpha; ++i) {
                const std::uint64_t pi = pow_u64(p, i);
                for (std::uint64_t y : congruence_roots(kind, p, alpha - 2 * i)) {
                    comps.push_back({p, alpha, i, pi * y});
                }
            }
        }
        per_prime.push_back(std::move(comps));
    }

    std::vector<TorsionSubgroup> out;
    for (const auto& block : per_prime) {
        if (block.empty()) return out;  // no stable p-part, no stable subgroup
    }
    std::vector<std::size_t> idx(per_prime.size(), 0);
    while (true) {
        std::vector<PrimeComponent> pick;
        pick.reserve(per_prime.size());
        for (std::size_t k = 0; k < per_prime.size(); ++k) pick.push_back(per_prime[k][idx[k]]);
        out.push_back(TorsionSubgroup::from_components(m, std::move(pick)));
        bool advanced = false;
        for (std::size_t k = per_prime.size(); k-- > 0;) {
            if (++idx[k] < per_prime[k].size()) {
                advanced = true;
                break;
            }
            idx[k] = 0;
        }
        if (!advanced) break;
    }
    return out;
}

std::uint64_t stable_count_oracle(int ell, std::uint64_t m, std::uint64_t oracle_bound) {
    require_ell(ell);
    const AutAction action = aut_action(ell, m);
    std::uint64_t count = 0;
    for (const auto& s : closure_oracle_enumerate(m, oracle_bound)) {
        if (is_stable(s, action)) ++count;
    }
    return count;
}

}  // namespace galocus
