#include "galocus/torsion.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace galocus {

std::array<std::array<std::int64_t, 2>, 2> aut_matrix(int ell) {
    switch (ell) {
        case 2: return {{{-1, 0}, {0, -1}}};
        case 3: return {{{0, -1}, {1, -1}}};
        case 4: return {{{0, -1}, {1, 0}}};
        case 6: return {{{0, 1}, {-1, 1}}};
    }
    throw std::invalid_argument("aut_matrix: ell must be one of {2,3,4,6}");
}

AutAction aut_action(int ell, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("aut_action: m must be positive");
    const auto raw = aut_matrix(ell);
    AutAction a;
    a.ell = ell;
    a.modulus = m;
    const std::int64_t mm = static_cast<std::int64_t>(m);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            a.matrix[r][c] = static_cast<std::uint64_t>(((raw[r][c] % mm) + mm) % mm);
        }
    }
    return a;
}

TorsionPair AutAction::apply(TorsionPair v) const {
    const unsigned __int128 a = v.first, b = v.second;
    return {static_cast<std::uint64_t>((matrix[0][0] * a + matrix[0][1] * b) % modulus),
            static_cast<std::uint64_t>((matrix[1][0] * a + matrix[1][1] * b) % modulus)};
}

Fingerprint subgroup_closure(std::uint64_t m, std::span<const TorsionPair> gens) {
    if (m == 0) throw std::invalid_argument("subgroup_closure: m must be positive");
    std::set<TorsionPair> elements{{0, 0}};
    std::vector<TorsionPair> work{{0, 0}};
    std::vector<TorsionPair> reduced;
    reduced.reserve(gens.size());
    for (const auto& g : gens) reduced.emplace_back(g.first % m, g.second % m);
    while (!work.empty()) {
        const TorsionPair e = work.back();
        work.pop_back();
        for (const auto& g : reduced) {
            TorsionPair next{(e.first + g.first) % m, (e.second + g.second) % m};
            if (elements.insert(next).second) work.push_back(next);
        }
    }
    return Fingerprint(elements.begin(), elements.end());
}

namespace {

// Multiplicative decomposition of m with the CRT idempotents e_p
// (e_p == 1 mod p^alpha, == 0 mod every other prime power of m).
struct CrtBasis {
    std::uint64_t m = 1;
    Factorization factors;
    std::vector<std::uint64_t> prime_power;  // p^alpha
    std::vector<std::uint64_t> idempotent;   // e_p mod m
};

CrtBasis crt_basis(std::uint64_t m) {
    CrtBasis basis;
    basis.m = m;
    basis.factors = factorize(m);
    for (const auto& [p, a] : basis.factors) {
        const std::uint64_t q = pow_u64(p, a);
        basis.prime_power.push_back(q);
        const std::uint64_t cofactor = m / q;
        if (cofactor == 1) {
            basis.idempotent.push_back(1 % m);
        } else {
            const std::uint64_t inv = inverse_mod(cofactor % q, q);
            basis.idempotent.push_back(
                static_cast<std::uint64_t>(static_cast<unsigned __int128>(cofactor) * inv % m));
        }
    }
    return basis;
}

// Elements of S_{x,i} inside (Z/qZ)^2 for q = p^alpha:
// { (a p^i, a x + b p^(alpha-i)) : 0 <= a < p^(alpha-i), 0 <= b < p^i }.
std::vector<TorsionPair> prime_component_elements(const PrimeComponent& c) {
    const std::uint64_t q = pow_u64(c.prime, c.alpha);
    const std::uint64_t pi = pow_u64(c.prime, c.i);
    const std::uint64_t pco = pow_u64(c.prime, c.alpha - c.i);
    std::vector<TorsionPair> out;
    out.reserve(q);
    for (std::uint64_t a = 0; a < pco; ++a) {
        const std::uint64_t first = a * pi % q;
        const std::uint64_t ax = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * c.x % q);
        for (std::uint64_t b = 0; b < pi; ++b) {
            out.emplace_back(first, (ax + b * pco) % q);
        }
    }
    return out;
}

Fingerprint combine_components(const CrtBasis& basis, std::span<const PrimeComponent> comps) {
    const std::uint64_t m = basis.m;
    std::vector<TorsionPair> acc{{0, 0}};
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const std::uint64_t e = basis.idempotent[k];
        std::vector<TorsionPair> lifted = prime_component_elements(comps[k]);
        for (auto& v : lifted) {
            v.first = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v.first) * e % m);
            v.second = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v.second) * e % m);
        }
        std::vector<TorsionPair> next;
        next.reserve(acc.size() * lifted.size());
        for (const auto& u : acc) {
            for (const auto& v : lifted) {
                next.emplace_back((u.first + v.first) % m, (u.second + v.second) % m);
            }
        }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

unsigned power_of(std::uint64_t p, std::uint64_t value) {
    unsigned v = 0;
    while (value % p == 0 && value > 1) {
        value /= p;
        ++v;
    }
    if (value != 1) throw CanonicalizationError("projection size is not a power of the prime");
    return v;
}

}  // namespace

TorsionSubgroup TorsionSubgroup::from_components(std::uint64_t m,
                                                 std::vector<PrimeComponent> components) {
    if (m == 0) throw std::invalid_argument("TorsionSubgroup: m must be positive");
    const CrtBasis basis = crt_basis(m);
    if (components.size() != basis.factors.size()) {
        throw std::invalid_argument("TorsionSubgroup: one component per prime of m required");
    }
    for (std::size_t k = 0; k < components.size(); ++k) {
        const auto& c = components[k];
        const auto& f = basis.factors[k];
        if (c.prime != f.prime || c.alpha != f.exponent || c.i > c.alpha ||
            c.x >= pow_u64(c.prime, c.alpha - c.i)) {
            throw std::invalid_argument("TorsionSubgroup: component out of range");
        }
    }
    TorsionSubgroup s;
    s.modulus_ = m;
    s.components_ = std::move(components);
    s.elements_ = combine_components(basis, s.components_);
    return s;
}

TorsionSubgroup TorsionSubgroup::from_generators(std::uint64_t m,
                                                 std::span<const TorsionPair> gens) {
    Fingerprint closure = subgroup_closure(m, gens);
    if (closure.size() != m) {
        throw CanonicalizationError("generated subgroup has order " +
                                    std::to_string(closure.size()) + ", expected " +
                                    std::to_string(m));
    }

    // Recover the per-prime (i, x) coordinates by CRT-splitting the element
    // set and matching against the S_{x,i} family.
    const CrtBasis basis = crt_basis(m);
    std::vector<PrimeComponent> comps;
    for (std::size_t k = 0; k < basis.factors.size(); ++k) {
        const std::uint64_t p = basis.factors[k].prime;
        const unsigned alpha = basis.factors[k].exponent;
        const std::uint64_t q = basis.prime_power[k];

        std::set<TorsionPair> proj;
        std::set<std::uint64_t> first_coords;
        for (const auto& e : closure) {
            proj.insert({e.first % q, e.second % q});
            first_coords.insert(e.first % q);
        }
        if (proj.size() != q) {
            throw CanonicalizationError("p-part does not have order p^alpha");
        }
        const unsigned i = alpha - power_of(p, first_coords.size());
        const std::uint64_t pi = pow_u64(p, i) % q;  // 0 when i == alpha
        const std::uint64_t pco = pow_u64(p, alpha - i);
        std::uint64_t x = 0;
        bool found = false;
        for (const auto& e : proj) {
            if (e.first == pi) {
                x = e.second % pco;
                found = true;
                break;
            }
        }
        if (!found) throw CanonicalizationError("no element with first coordinate p^i");
        PrimeComponent c{p, alpha, i, x};
        auto rebuilt = prime_component_elements(c);
        std::sort(rebuilt.begin(), rebuilt.end());
        if (rebuilt.size() != proj.size() ||
            !std::equal(rebuilt.begin(), rebuilt.end(), proj.begin())) {
            throw CanonicalizationError("p-part is not of the S_{x,i} form");
        }
        comps.push_back(c);
    }

    TorsionSubgroup s;
    s.modulus_ = m;
    s.components_ = std::move(comps);
    s.elements_ = std::move(closure);
    return s;
}

bool TorsionSubgroup::contains(TorsionPair v) const {
    v.first %= modulus_;
    v.second %= modulus_;
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::array<TorsionPair, 2> TorsionSubgroup::canonical_generators() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> g1a, g1b, g2a, g2b;
    for (const auto& c : components_) {
        const std::uint64_t q = pow_u64(c.prime, c.alpha);
        g1a.emplace_back(pow_u64(c.prime, c.i) % q, q);
        g1b.emplace_back(c.x, q);
        g2a.emplace_back(0, q);
        g2b.emplace_back(pow_u64(c.prime, c.alpha - c.i) % q, q);
    }
    return {TorsionPair{crt_combine(g1a), crt_combine(g1b)},
            TorsionPair{crt_combine(g2a), crt_combine(g2b)}};
}

bool is_stable(const TorsionSubgroup& s, const AutAction& a) {
    if (s.modulus() != a.modulus) {
        throw std::invalid_argument("is_stable: modulus mismatch");
    }
    for (const auto& e : s.elements()) {
        if (!s.contains(a.apply(e))) return false;
    }
    return true;
}

std::vector<TorsionSubgroup> closure_oracle_enumerate(std::uint64_t m,
                                                      std::uint64_t oracle_bound) {
    if (m == 0) throw std::invalid_argument("closure_oracle_enumerate: m must be positive");
    if (m > oracle_bound) {
        throw std::invalid_argument("closure_oracle_enumerate: m exceeds the oracle bound " +
                                    std::to_string(oracle_bound));
    }
    std::set<Fingerprint> seen;
    std::vector<TorsionPair> domain;
    domain.reserve(m * m);
    for (std::uint64_t a = 0; a < m; ++a) {
        for (std::uint64_t b = 0; b < m; ++b) domain.emplace_back(a, b);
    }
    for (const auto& g1 : domain) {
        for (const auto& g2 : domain) {
            const std::array<TorsionPair, 2> gens{g1, g2};
            Fingerprint fp = subgroup_closure(m, gens);
            if (fp.size() == m) seen.insert(std::move(fp));
        }
    }
    std::vector<TorsionSubgroup> out;
    out.reserve(seen.size());
    for (const auto& fp : seen) {
        // The full element set is a generating set; this rebuilds fp through
        // the canonical path and recovers the (i, x) coordinates.
        out.push_back(TorsionSubgroup::from_generators(m, fp));
    }
    return out;
}

std::vector<TorsionSubgroup> enumerate_order_m_subgroups(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("enumerate_order_m_subgroups: m must be positive");
    const Factorization factors = factorize(m);

    std::vector<std::vector<PrimeComponent>> per_prime;
    for (const auto& [p, alpha] : factors) {
        std::vector<PrimeComponent> comps;
        for (unsigned i = 0; i <= alpha; ++i) {
            const std::uint64_t xmax = pow_u64(p, alpha - i);
            for (std::uint64_t x = 0; x < xmax; ++x) comps.push_back({p, alpha, i, x});
        }
        per_prime.push_back(std::move(comps));
    }

    std::vector<TorsionSubgroup> out;
    std::vector<std::size_t> idx(per_prime.size(), 0);
    while (true) {
        std::vector<PrimeComponent> pick;
        pick.reserve(per_prime.size());
        for (std::size_t k = 0; k < per_prime.size(); ++k) pick.push_back(per_prime[k][idx[k]]);
        out.push_back(TorsionSubgroup::from_components(m, std::move(pick)));
        // Odometer with the last prime fastest: lexicographic (prime, i, x).
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

}  // namespace galocus
