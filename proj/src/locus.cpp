#include "galocus/locus.hpp"

#include <cstdlib>
#include <stdexcept>

namespace galocus {

namespace {

using IntMatrix = std::array<std::array<std::int64_t, 2>, 2>;

IntMatrix epsilon_matrix(int ell, std::uint64_t m) {
    const IntMatrix xi = aut_matrix(ell);
    const std::int64_t mm = static_cast<std::int64_t>(m);
    IntMatrix e{};
    switch (ell) {
        case 2:  // m x
            e = {{{mm, 0}, {0, mm}}};
            break;
        case 3:  // m (2 + xi) x
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) e[r][c] = mm * ((r == c ? 2 : 0) + xi[r][c]);
            break;
        case 4:  // 2m (1 + xi) x
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) e[r][c] = 2 * mm * ((r == c ? 1 : 0) + xi[r][c]);
            break;
        case 6:  // 6m xi x
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) e[r][c] = 6 * mm * xi[r][c];
            break;
        default:
            throw std::invalid_argument("epsilon_matrix: ell must be one of {2,3,4,6}");
    }
    return e;
}

void require_degree(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("the divisor degree n must be at least 3");
}

}  // namespace

std::uint64_t deg_epsilon(int ell, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("deg_epsilon: m must be positive");
    const IntMatrix e = epsilon_matrix(ell, m);
    const std::int64_t det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    return static_cast<std::uint64_t>(std::abs(det));
}

std::uint64_t groups_per_translation_subgroup(int ell, std::uint64_t m) {
    const std::uint64_t deg = deg_epsilon(ell, m);
    if (deg % m != 0) throw std::logic_error("deg eps is not divisible by m");
    return deg / m;
}

std::uint64_t disjoint_count(JClass j, std::uint64_t n) {
    require_degree(n);
    std::uint64_t total = 0;
    for (int ell : kAutOrders) {
        if (n % static_cast<std::uint64_t>(ell) != 0) continue;
        const std::uint64_t m = n / static_cast<std::uint64_t>(ell);
        total += psi(ell, j, m) * groups_per_translation_subgroup(ell, m);
    }
    return total;
}

std::vector<DisjointClass> disjoint_group_inventory(JClass j, std::uint64_t n) {
    require_degree(n);
    std::vector<DisjointClass> out;
    for (int ell : kAutOrders) {
        if (!is_admissible(j, ell)) continue;
        if (n % static_cast<std::uint64_t>(ell) != 0) continue;
        const std::uint64_t m = n / static_cast<std::uint64_t>(ell);
        out.push_back({ell, m, psi(ell, j, m), groups_per_translation_subgroup(ell, m)});
    }
    return out;
}

CensusReport component_census(JClass j, std::uint64_t n) {
    require_degree(n);
    CensusReport report;
    report.n = n;
    report.j = j;

    // s ascending gives dimensions n-s descending.
    for (std::uint64_t s = 2; s <= n; ++s) {
        ComponentRecord rec;
        rec.dimension = n - s;
        rec.group_order = s;
        for (int ell : kAutOrders) {
            if (!is_admissible(j, ell)) continue;
            if (s % static_cast<std::uint64_t>(ell) != 0) continue;
            const std::uint64_t m = s / static_cast<std::uint64_t>(ell);
            std::uint64_t contributed = psi(ell, j, m);
            if (s == n) contributed *= groups_per_translation_subgroup(ell, m);
            if (contributed > 0) rec.constituents.push_back({ell, m, contributed});
            rec.count += contributed;
        }
        if (rec.count == 0) continue;
        if (rec.dimension > 0) {
            rec.fiber_dim = n - s - 1;
            rec.base = "E/H";
        }
        report.records.push_back(std::move(rec));
        report.total_components += report.records.back().count;
    }
    return report;
}

}  // namespace galocus
