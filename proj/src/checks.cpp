#include "galocus/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "galocus/ecmodel.hpp"
#include "galocus/locus.hpp"
#include "galocus/modarith.hpp"
#include "galocus/stable_count.hpp"
#include "galocus/torsion.hpp"

namespace galocus {

namespace {

// Any j-class that admits the automorphism order.
JClass admitting_class(int ell) {
    switch (ell) {
        case 2: return JClass::Generic;
        case 3:
        case 6: return JClass::J0;
        case 4: return JClass::J1728;
    }
    throw std::invalid_argument("admitting_class: bad ell");
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

std::vector<Fingerprint> fingerprints_of(const std::vector<TorsionSubgroup>& subs) {
    std::vector<Fingerprint> out;
    out.reserve(subs.size());
    for (const auto& s : subs) out.push_back(s.elements());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CheckResult check_psi_reference_table(bool corrupt) {
    const std::string name = "psi reference table";
    struct Entry {
        int ell;
        JClass j;
        std::uint64_t m;
        std::uint64_t expected;
    };
    std::vector<Entry> table{
        {2, JClass::Generic, 1, 1},  {2, JClass::Generic, 6, 12},
        {2, JClass::Generic, 12, 28}, {3, JClass::J0, 3, 1},
        {3, JClass::J0, 9, 1},        {3, JClass::J0, 7, 2},
        {3, JClass::J0, 28, 2},       {3, JClass::Generic, 5, 0},
        {4, JClass::J1728, 2, 1},     {4, JClass::J1728, 5, 2},
        {4, JClass::J1728, 9, 1},     {4, JClass::J1728, 15, 0},
        {6, JClass::J0, 7, 2},        {6, JClass::J0, 12, 1},
    };
    if (corrupt) table[1].expected = 13;  // deliberate fault for the failure path
    for (const auto& e : table) {
        const std::uint64_t got = psi(e.ell, e.j, e.m);
        if (got != e.expected) {
            std::ostringstream oss;
            oss << "psi_" << e.ell << "(" << j_class_name(e.j) << ", " << e.m << ") = " << got
                << ", reference table says " << e.expected;
            return fail(name, oss.str());
        }
    }
    return pass(name, std::to_string(table.size()) + " entries");
}

CheckResult check_sigma_brute_force(std::uint64_t max_m) {
    const std::string name = "sigma vs divisor sieve";
    std::vector<std::uint64_t> sieve(max_m + 1, 0);
    for (std::uint64_t d = 1; d <= max_m; ++d) {
        for (std::uint64_t k = d; k <= max_m; k += d) sieve[k] += d;
    }
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        if (sigma(m) != sieve[m]) {
            return fail(name, "sigma(" + std::to_string(m) + ") = " + std::to_string(sigma(m)) +
                                  ", sieve says " + std::to_string(sieve[m]));
        }
    }
    return pass(name, "all m <= " + std::to_string(max_m));
}

CheckResult check_congruence_roots(std::uint64_t max_prime_power) {
    const std::string name = "congruence roots vs exhaustive scans";
    std::uint64_t checked = 0;
    for (std::uint64_t p = 2; p <= max_prime_power; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned beta = 1;; ++beta) {
            std::uint64_t pb = 1;
            bool over = false;
            for (unsigned k = 0; k < beta; ++k) {
                pb *= p;
                if (pb > max_prime_power) {
                    over = true;
                    break;
                }
            }
            if (over) break;
            for (CongruenceKind kind :
                 {CongruenceKind::ZSqMinusZPlus1, CongruenceKind::ZSqPlus1}) {
                const auto scanned = congruence_roots(kind, p, beta);
                const unsigned closed = count_congruence_roots(kind, p, beta);
                if (scanned.size() != closed) {
                    std::ostringstream oss;
                    oss << (kind == CongruenceKind::ZSqMinusZPlus1 ? "z^2-z+1" : "z^2+1")
                        << " mod " << p << "^" << beta << ": closed form " << closed
                        << ", scan found " << scanned.size();
                    return fail(name, oss.str());
                }
                ++checked;
            }
        }
    }
    return pass(name, std::to_string(checked) + " prime-power cases");
}

CheckResult check_oracle_equivalence(std::uint64_t max_m) {
    const std::string name = "closure oracle vs enumeration vs closed form";
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        const auto oracle = closure_oracle_enumerate(m, max_m);
        if (oracle.size() != sigma(m)) {
            return fail(name, "oracle found " + std::to_string(oracle.size()) +
                                  " order-m subgroups for m = " + std::to_string(m) +
                                  ", sigma says " + std::to_string(sigma(m)));
        }
        const auto parametrized = enumerate_order_m_subgroups(m);
        if (fingerprints_of(oracle) != fingerprints_of(parametrized)) {
            return fail(name, "S_{x,i} family and closure oracle disagree as sets at m = " +
                                  std::to_string(m));
        }
        for (int ell : kAutOrders) {
            const AutAction action = aut_action(ell, m);
            std::vector<TorsionSubgroup> oracle_stable;
            for (const auto& s : oracle) {
                if (is_stable(s, action)) oracle_stable.push_back(s);
            }
            const auto constructive = enumerate_stable_subgroups(ell, m, max_m);
            const std::uint64_t closed = psi(ell, admitting_class(ell), m);
            if (oracle_stable.size() != constructive.size() || constructive.size() != closed) {
                std::ostringstream oss;
                oss << "ell = " << ell << ", m = " << m << ": oracle " << oracle_stable.size()
                    << ", constructive " << constructive.size() << ", closed form " << closed;
                return fail(name, oss.str());
            }
            if (fingerprints_of(oracle_stable) != fingerprints_of(constructive)) {
                std::ostringstream oss;
                oss << "ell = " << ell << ", m = " << m
                    << ": stable fingerprint sets disagree";
                return fail(name, oss.str());
            }
        }
    }
    return pass(name, "all ell, m <= " + std::to_string(max_m));
}

CheckResult check_constructive_agreement(std::uint64_t max_m) {
    const std::string name = "constructive enumeration vs closed form";
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        const auto for_ell3 = enumerate_stable_subgroups(3, m, max_m);
        for (int ell : kAutOrders) {
            const auto subs = enumerate_stable_subgroups(ell, m, max_m);
            const std::uint64_t closed = psi(ell, admitting_class(ell), m);
            if (subs.size() != closed) {
                std::ostringstream oss;
                oss << "ell = " << ell << ", m = " << m << ": enumeration " << subs.size()
                    << ", closed form " << closed;
                return fail(name, oss.str());
            }
            const AutAction action = aut_action(ell, m);
            for (const auto& s : subs) {
                if (s.order() != m || !is_stable(s, action)) {
                    return fail(name, "enumerated subgroup fails is_stable at ell = " +
                                          std::to_string(ell) + ", m = " + std::to_string(m));
                }
            }
            if (ell == 6 && fingerprints_of(subs) != fingerprints_of(for_ell3)) {
                return fail(name, "ell = 3 and ell = 6 enumerations differ at m = " +
                                      std::to_string(m));
            }
        }
    }
    return pass(name, "all ell, m <= " + std::to_string(max_m));
}

CheckResult check_psi_identities(std::uint64_t max_m) {
    const std::string name = "psi_2 = sigma and psi_3 = psi_6";
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        if (psi(2, JClass::Generic, m) != sigma(m)) {
            return fail(name, "psi_2(" + std::to_string(m) + ") != sigma");
        }
        if (psi(3, JClass::J0, m) != psi(6, JClass::J0, m)) {
            return fail(name, "psi_3(" + std::to_string(m) + ") != psi_6");
        }
    }
    return pass(name, "all m <= " + std::to_string(max_m));
}

CheckResult check_multiplicativity(unsigned pairs, std::uint64_t max_product,
                                   std::uint64_t seed) {
    const std::string name = "psi multiplicativity on coprime pairs";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick_a(1, max_product);
    unsigned sampled = 0;
    while (sampled < pairs) {
        const std::uint64_t a = pick_a(rng);
        std::uniform_int_distribution<std::uint64_t> pick_b(1, max_product / a);
        const std::uint64_t b = pick_b(rng);
        if (std::gcd(a, b) != 1) continue;
        ++sampled;
        for (int ell : kAutOrders) {
            const JClass j = admitting_class(ell);
            if (psi(ell, j, a * b) != psi(ell, j, a) * psi(ell, j, b)) {
                std::ostringstream oss;
                oss << "psi_" << ell << "(" << a << "*" << b << ") != psi(" << a << ")*psi("
                    << b << ")";
                return fail(name, oss.str());
            }
        }
    }
    return pass(name, std::to_string(pairs) + " pairs, all ell");
}

CheckResult check_table1() {
    const std::string name = "census reference cells (N = 2..5)";
    struct Column {
        std::uint64_t N;
        JClass j;
        std::vector<std::uint64_t> by_dimension;  // dimensions 0 .. N-1
        std::uint64_t total;
    };
    const std::vector<Column> columns{
        {2, JClass::Generic, {0, 1}, 1},
        {2, JClass::J0, {3, 1}, 4},
        {2, JClass::J1728, {0, 1}, 1},
        {3, JClass::Generic, {6, 0, 1}, 7},
        {3, JClass::J0, {6, 1, 1}, 8},
        {3, JClass::J1728, {14, 0, 1}, 15},
        {4, JClass::Generic, {0, 3, 0, 1}, 4},
        {4, JClass::J0, {0, 3, 1, 1}, 5},
        {4, JClass::J1728, {0, 4, 0, 1}, 5},
        {5, JClass::Generic, {12, 0, 3, 0, 1}, 16},
        {5, JClass::J0, {48, 0, 3, 1, 1}, 53},
        {5, JClass::J1728, {12, 0, 4, 0, 1}, 17},
    };
    for (const auto& col : columns) {
        const CensusReport report = component_census(col.j, col.N + 1);
        for (std::uint64_t dim = 0; dim < col.by_dimension.size(); ++dim) {
            std::uint64_t got = 0;
            for (const auto& rec : report.records) {
                if (rec.dimension == dim) got = rec.count;
            }
            if (got != col.by_dimension[dim]) {
                std::ostringstream oss;
                oss << "N = " << col.N << ", j = " << j_class_name(col.j) << ", dimension "
                    << dim << ": got " << got << ", expected " << col.by_dimension[dim];
                return fail(name, oss.str());
            }
        }
        if (report.total_components != col.total) {
            std::ostringstream oss;
            oss << "N = " << col.N << ", j = " << j_class_name(col.j) << ": total "
                << report.total_components << ", expected " << col.total;
            return fail(name, oss.str());
        }
    }
    return pass(name, "12 columns, 42 cells + totals");
}

CheckResult check_coefficient_identity(std::uint64_t max_n) {
    const std::string name = "deg eps determinants and q-class coefficients";
    for (std::uint64_t m = 1; m <= max_n; ++m) {
        if (deg_epsilon(2, m) != m * m || deg_epsilon(3, m) != 3 * m * m ||
            deg_epsilon(4, m) != 8 * m * m || deg_epsilon(6, m) != 36 * m * m) {
            return fail(name, "deg eps closed form fails at m = " + std::to_string(m));
        }
    }
    for (std::uint64_t n = 3; n <= max_n; ++n) {
        for (int ell : kAutOrders) {
            if (n % static_cast<std::uint64_t>(ell) != 0) continue;
            const std::uint64_t m = n / static_cast<std::uint64_t>(ell);
            std::uint64_t expected = 0;
            switch (ell) {
                case 2: expected = n / 2; break;
                case 3: expected = n; break;
                case 4: expected = 2 * n; break;
                case 6: expected = 6 * n; break;
            }
            if (groups_per_translation_subgroup(ell, m) != expected) {
                std::ostringstream oss;
                oss << "q-classes per H at ell = " << ell << ", n = " << n << ": got "
                    << groups_per_translation_subgroup(ell, m) << ", expected " << expected;
                return fail(name, oss.str());
            }
        }
    }
    return pass(name, "m, n <= " + std::to_string(max_n));
}

CheckResult check_intro_theorem(std::uint64_t max_N) {
    const std::string name = "generic-curve census formulas";
    for (std::uint64_t N = 2; N <= max_N; ++N) {
        const std::uint64_t n = N + 1;
        const CensusReport report = component_census(JClass::Generic, n);
        auto count_at = [&](std::uint64_t dim) {
            for (const auto& rec : report.records) {
                if (rec.dimension == dim) return rec.count;
            }
            return std::uint64_t{0};
        };
        const std::uint64_t expected_disjoint = N % 2 == 1 ? (n / 2) * sigma(n / 2) : 0;
        if (count_at(0) != expected_disjoint) {
            return fail(name, "0-dimensional count at N = " + std::to_string(N) + ": got " +
                                  std::to_string(count_at(0)) + ", expected " +
                                  std::to_string(expected_disjoint));
        }
        for (std::uint64_t s = 2; s <= N; ++s) {
            const std::uint64_t expected = s % 2 == 0 ? sigma(s / 2) : 0;
            if (count_at(N + 1 - s) != expected) {
                std::ostringstream oss;
                oss << "N = " << N << ", s = " << s << ": got " << count_at(N + 1 - s)
                    << " components of dimension " << N + 1 - s << ", expected " << expected;
                return fail(name, oss.str());
            }
        }
    }
    return pass(name, "N <= " + std::to_string(max_N));
}

CheckResult check_census_consistency(std::uint64_t max_n) {
    const std::string name = "census structural invariants";
    for (JClass j : {JClass::Generic, JClass::J0, JClass::J1728}) {
        for (std::uint64_t n = 3; n <= max_n; ++n) {
            const CensusReport report = component_census(j, n);
            const std::uint64_t disjoint = disjoint_count(j, n);
            std::uint64_t inventory_total = 0;
            for (const auto& cls : disjoint_group_inventory(j, n)) {
                inventory_total += cls.psi_count * cls.groups_per_h;
            }
            std::uint64_t dim0 = 0;
            std::uint64_t total = 0;
            std::uint64_t previous_dimension = n;  // records must strictly descend
            for (const auto& rec : report.records) {
                if (rec.dimension >= previous_dimension) {
                    return fail(name, "records not strictly descending at n = " +
                                          std::to_string(n));
                }
                previous_dimension = rec.dimension;
                if (rec.dimension == 0) dim0 = rec.count;
                total += rec.count;
                if (rec.dimension != n - rec.group_order) {
                    return fail(name, "dimension != n - s at n = " + std::to_string(n));
                }
                std::uint64_t constituent_sum = 0;
                for (const auto& c : rec.constituents) {
                    constituent_sum += c.psi_count;
                    if (static_cast<std::uint64_t>(c.ell) * c.h_order != rec.group_order) {
                        return fail(name, "ell * |H| != s at n = " + std::to_string(n));
                    }
                }
                if (constituent_sum != rec.count) {
                    return fail(name, "count != sum of constituents at n = " +
                                          std::to_string(n));
                }
                if (rec.dimension > 0) {
                    if (!rec.fiber_dim || !rec.base ||
                        *rec.fiber_dim != n - rec.group_order - 1 ||
                        rec.dimension != *rec.fiber_dim + 1 || *rec.base != "E/H") {
                        return fail(name, "bundle descriptor broken at n = " +
                                              std::to_string(n));
                    }
                } else if (rec.fiber_dim || rec.base) {
                    return fail(name, "dimension-0 record carries bundle data at n = " +
                                          std::to_string(n));
                }
                if (j == JClass::Generic && rec.group_order % 2 != 0) {
                    return fail(name, "generic census has a record for odd s at n = " +
                                          std::to_string(n));
                }
            }
            if (dim0 != disjoint || disjoint != inventory_total) {
                std::ostringstream oss;
                oss << "j = " << j_class_name(j) << ", n = " << n << ": census dim-0 " << dim0
                    << ", disjoint_count " << disjoint << ", inventory " << inventory_total;
                return fail(name, oss.str());
            }
            if (total != report.total_components) {
                return fail(name, "total mismatch at n = " + std::to_string(n));
            }
        }
    }
    return pass(name, "all j, n <= " + std::to_string(max_n));
}

CheckResult check_curve_witness(unsigned configs, std::uint64_t seed) {
    const std::string name = "finite-field witness";
    std::mt19937_64 rng(seed);

    struct Setup {
        JClass j;
        std::uint64_t m;
        std::vector<int> ells;
    };
    const std::vector<Setup> setups{
        {JClass::J0, 3, {2, 3, 6}},
        {JClass::J1728, 2, {2, 4}},
    };

    for (const auto& setup : setups) {
        const auto curve = find_curve_with_full_torsion(setup.j, setup.m);
        if (!curve) {
            return fail(name, "no " + j_class_name(setup.j) + " curve with full E[" +
                                  std::to_string(setup.m) + "] found");
        }
        const CurveModel& E = *curve;
        const auto& pts = E.points();
        std::uniform_int_distribution<std::size_t> pick_point(0, pts.size() - 1);

        for (int ell : setup.ells) {
            const auto stable = stable_point_subgroups(E, ell, setup.m);
            const std::uint64_t expected = psi(ell, setup.j, setup.m);
            if (stable.size() != expected) {
                std::ostringstream oss;
                oss << "p = " << E.p() << ", ell = " << ell << ": " << stable.size()
                    << " stable rational subgroups, psi says " << expected;
                return fail(name, oss.str());
            }
            if (stable.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick_h(0, stable.size() - 1);
            for (unsigned t = 0; t < configs; ++t) {
                const auto& H = stable[pick_h(rng)];
                const CurvePoint q = pts[pick_point(rng)];
                if (!divisor_sum_check(E, ell, H, q)) {
                    std::ostringstream oss;
                    oss << "divisor-sum identity failed on p = " << E.p() << ", ell = " << ell;
                    return fail(name, oss.str());
                }
            }
            for (unsigned t = 0; t < configs; ++t) {
                const auto& H = stable[pick_h(rng)];
                const CurvePoint q = pts[pick_point(rng)];
                const CurvePoint q2 = pts[pick_point(rng)];
                try {
                    group_equality_check(E, ell, H, q, q2);
                } catch (const std::logic_error& e) {
                    return fail(name, std::string("group-equality biconditional: ") + e.what());
                }
            }
        }
    }

    // eps kernel sizes equal deg eps once E[deg eps] is rational.
    struct KernelCase {
        JClass j;
        std::uint64_t torsion;
        int ell;
        std::uint64_t m;
    };
    const std::vector<KernelCase> kernel_cases{
        {JClass::J0, 3, 3, 1},      // deg 3, kernel inside E[3]
        {JClass::J1728, 4, 2, 2},   // deg 4, kernel inside E[4]
        {JClass::J1728, 4, 4, 1},   // deg 8, kernel inside E[4]
    };
    for (const auto& kc : kernel_cases) {
        const auto curve = find_curve_with_full_torsion(kc.j, kc.torsion);
        if (!curve) {
            return fail(name, "no curve with full E[" + std::to_string(kc.torsion) +
                                  "] for the kernel count");
        }
        std::uint64_t kernel = 0;
        for (const auto& P : curve->points()) {
            if (curve->epsilon_apply(kc.ell, kc.m, P).at_infinity) ++kernel;
        }
        if (kernel != deg_epsilon(kc.ell, kc.m)) {
            std::ostringstream oss;
            oss << "ker eps_{" << kc.ell << "," << kc.m << "} on p = " << curve->p() << " has "
                << kernel << " points, deg eps = " << deg_epsilon(kc.ell, kc.m);
            return fail(name, oss.str());
        }
    }

    return pass(name, std::to_string(configs) + " random configurations per (curve, ell)");
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(check_psi_reference_table(options.inject_fault));
    results.push_back(check_sigma_brute_force(10000));
    results.push_back(check_congruence_roots(10000));
    results.push_back(check_oracle_equivalence(options.oracle_max));
    results.push_back(check_constructive_agreement(options.constructive_max));
    results.push_back(check_psi_identities(10000));
    results.push_back(check_multiplicativity(1000, 10000, 0x5eed5eedULL));
    results.push_back(check_table1());
    results.push_back(check_coefficient_identity(200));
    results.push_back(check_intro_theorem(99));
    results.push_back(check_census_consistency(200));
    if (options.with_curves) {
        results.push_back(check_curve_witness(100, 0xc0ffeeULL));
    }
    return results;
}

}  // namespace galocus
