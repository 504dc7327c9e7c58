#include "galocus/modarith.hpp"

#include <limits>
#include <stdexcept>

namespace galocus {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t pow_u64(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned k = 0; k < e; ++k) {
        if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p) {
            throw std::overflow_error("pow_u64: overflow");
        }
        r *= p;
    }
    return r;
}

Factorization factorize(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("factorize: m must be positive");
    Factorization out;
    for (std::uint64_t d = 2; d <= m / d; ++d) {
        if (m % d != 0) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

std::uint64_t sigma(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("sigma: m must be positive");
    unsigned __int128 total = 1;
    for (const auto& [p, a] : factorize(m)) {
        unsigned __int128 pe = 1;  // p^(a+1)
        for (unsigned k = 0; k <= a; ++k) pe *= p;
        total *= (pe - 1) / (p - 1);
    }
    return static_cast<std::uint64_t>(total);
}

unsigned count_congruence_roots(CongruenceKind kind, std::uint64_t p, unsigned beta) {
    if (!is_prime(p)) throw std::invalid_argument("count_congruence_roots: p must be prime");
    if (beta == 0) return 1;  // trivial ring: one residue, which is a root
    switch (kind) {
        case CongruenceKind::ZSqMinusZPlus1:
            if (p == 3) return beta == 1 ? 1 : 0;
            return p % 3 == 1 ? 2 : 0;
        case CongruenceKind::ZSqPlus1:
            if (p == 2) return beta == 1 ? 1 : 0;
            return p % 4 == 1 ? 2 : 0;
    }
    throw std::invalid_argument("count_congruence_roots: bad kind");
}

std::vector<std::uint64_t> congruence_roots(CongruenceKind kind, std::uint64_t p,
                                            unsigned beta) {
    if (!is_prime(p)) throw std::invalid_argument("congruence_roots: p must be prime");
    if (beta == 0) return {0};
    const std::uint64_t mod = pow_u64(p, beta);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t z = 0; z < mod; ++z) {
        unsigned __int128 v = static_cast<unsigned __int128>(z) * z + 1;
        if (kind == CongruenceKind::ZSqMinusZPlus1) v += mod - z;
        if (v % mod == 0) roots.push_back(z);
    }
    return roots;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
    std::int64_t r0 = static_cast<std::int64_t>(a % mod), r1 = static_cast<std::int64_t>(mod);
    std::int64_t u0 = 1, u1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: not invertible");
    std::int64_t mm = static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>((u0 % mm + mm) % mm);
}

std::uint64_t crt_combine(std::span<const std::pair<std::uint64_t, std::uint64_t>> residue_modulus) {
    unsigned __int128 x = 0;
    unsigned __int128 m = 1;
    for (const auto& [r, mod] : residue_modulus) {
        if (mod == 0) throw std::invalid_argument("crt_combine: zero modulus");
        if (mod == 1) continue;
        // Solve x' == x (mod m), x' == r (mod `mod`): x' = x + m*t.
        std::uint64_t mm = static_cast<std::uint64_t>(m % mod);
        std::uint64_t diff = (r % mod + mod - static_cast<std::uint64_t>(x % mod)) % mod;
        std::uint64_t t = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(diff) * inverse_mod(mm, mod) % mod);
        x += m * t;
        m *= mod;
    }
    return static_cast<std::uint64_t>(x);
}

}  // namespace galocus
