// Command-line front end: census tables, psi queries, subgroup listings,
// disjoint-subspace inventories, and the verification sweep.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "galocus/checks.hpp"
#include "galocus/ecmodel.hpp"
#include "galocus/locus.hpp"
#include "galocus/report_io.hpp"

namespace {

using namespace galocus;

std::uint64_t resolve_degree(const CLI::Option* opt_n, const CLI::Option* opt_N,
                             std::uint64_t n, std::uint64_t N) {
    const bool has_n = opt_n->count() > 0;
    const bool has_N = opt_N->count() > 0;
    if (has_n == has_N) {
        throw std::invalid_argument("give exactly one of --n (degree) or --N (ambient dimension)");
    }
    return has_n ? n : N + 1;
}

int run_census(std::uint64_t n, const std::string& j_label, const std::string& format_label) {
    const CensusReport report = component_census(parse_j_class(j_label), n);
    std::cout << render(report, parse_output_format(format_label));
    return 0;
}

int run_psi(int ell, std::uint64_t m, const std::string& j_label, bool explain) {
    const JClass j = parse_j_class(j_label);
    const std::uint64_t value = psi(ell, j, m);
    if (!explain) {
        std::cout << value << "\n";
        return 0;
    }
    std::cout << "psi_" << ell << "(" << m << ") = ";
    if (!is_admissible(j, ell)) {
        std::cout << "0 (no order-" << ell << " automorphism for j = " << j_label << ")\n";
        return 0;
    }
    const Factorization factors = factorize(m);
    if (factors.empty()) {
        std::cout << "1 (empty product)\n";
        return 0;
    }
    std::string lhs, rhs;
    for (const auto& [p, alpha] : factors) {
        if (!lhs.empty()) {
            lhs += " * ";
            rhs += " * ";
        }
        lhs += "psi_" + std::to_string(ell) + "(" + std::to_string(p) + "^" +
               std::to_string(alpha) + ")";
        rhs += std::to_string(psi_prime_power(ell, p, alpha));
    }
    std::cout << lhs << " = " << rhs << " = " << value << "\n";
    return 0;
}

int run_subgroups(int ell, std::uint64_t m, bool list, std::uint64_t bound) {
    auto subs = enumerate_stable_subgroups(ell, m, bound);
    std::cout << subs.size() << "\n";
    if (!list) return 0;
    std::sort(subs.begin(), subs.end());  // lexicographic on fingerprints
    for (const auto& s : subs) {
        const auto gens = s.canonical_generators();
        std::cout << "(" << gens[0].first << "," << gens[0].second << "),(" << gens[1].first
                  << "," << gens[1].second << ")\n";
    }
    return 0;
}

int run_disjoint(std::uint64_t n, const std::string& j_label) {
    const JClass j = parse_j_class(j_label);
    std::cout << disjoint_count(j, n) << "\n";
    for (const auto& cls : disjoint_group_inventory(j, n)) {
        std::cout << "  ell = " << cls.ell << ": |H| = " << cls.h_order
                  << ", psi = " << cls.psi_count << ", q-classes per H = " << cls.groups_per_h
                  << ", subspaces = " << cls.psi_count * cls.groups_per_h << "\n";
    }
    return 0;
}

int run_verify(const VerifyOptions& options) {
    const auto results = run_verification(options);
    const CheckResult* first_failure = nullptr;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "ok    " << r.name;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        } else {
            std::cout << "FAIL  " << r.name << ": " << r.detail << "\n";
            if (!first_failure) first_failure = &r;
        }
    }
    if (first_failure) {
        std::cerr << "verification failed: " << first_failure->name << ": "
                  << first_failure->detail << "\n";
        return 2;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"component census of the locus of Galois subspaces for elliptic curves"};
    app.require_subcommand(1);

    // census
    auto* census = app.add_subcommand("census", "component census for a degree-n embedding");
    std::uint64_t census_n = 0, census_N = 0;
    std::string census_j = "generic", census_format = "table";
    auto* census_opt_n = census->add_option("--n", census_n, "divisor degree (>= 3)");
    auto* census_opt_N = census->add_option("--N", census_N, "ambient dimension (>= 2)");
    census->add_option("--j", census_j, "j-class: generic, 0 or 1728");
    census->add_option("--format", census_format, "table, csv or json");

    // psi
    auto* psi_cmd = app.add_subcommand("psi", "number of xi-stable order-m subgroups of E[m]");
    int psi_ell = 0;
    std::uint64_t psi_m = 0;
    std::string psi_j = "generic";
    bool psi_explain = false;
    psi_cmd->add_option("--ell", psi_ell, "automorphism order: 2, 3, 4 or 6")->required();
    psi_cmd->add_option("--m", psi_m, "subgroup order (>= 1)")->required();
    psi_cmd->add_option("--j", psi_j, "j-class: generic, 0 or 1728");
    psi_cmd->add_flag("--explain", psi_explain, "show the per-prime-power breakdown");

    // subgroups
    auto* sub_cmd = app.add_subcommand("subgroups", "enumerate the xi-stable order-m subgroups");
    int sub_ell = 0;
    std::uint64_t sub_m = 0, sub_bound = kDefaultConstructiveBound;
    bool sub_list = false;
    sub_cmd->add_option("--ell", sub_ell, "automorphism order: 2, 3, 4 or 6")->required();
    sub_cmd->add_option("--m", sub_m, "subgroup order (>= 1)")->required();
    sub_cmd->add_flag("--list", sub_list, "print canonical generator pairs");
    sub_cmd->add_option("--bound", sub_bound, "constructive enumeration bound");

    // disjoint
    auto* dis_cmd = app.add_subcommand("disjoint", "count disjoint Galois subspaces");
    std::uint64_t dis_n = 0, dis_N = 0;
    std::string dis_j = "generic";
    auto* dis_opt_n = dis_cmd->add_option("--n", dis_n, "divisor degree (>= 3)");
    auto* dis_opt_N = dis_cmd->add_option("--N", dis_N, "ambient dimension (>= 2)");
    dis_cmd->add_option("--j", dis_j, "j-class: generic, 0 or 1728");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "run the verification sweep");
    VerifyOptions options;
    ver_cmd->add_option("--max-m", options.oracle_max, "closure-oracle bound (default 12)");
    ver_cmd->add_option("--constructive-max", options.constructive_max,
                        "constructive enumeration bound (default 500)");
    ver_cmd->add_flag("--with-curves", options.with_curves,
                      "include the finite-field witness checks");
    ver_cmd->add_flag("--inject-fault", options.inject_fault,
                      "corrupt one psi reference entry (test hook)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(census)) {
            return run_census(resolve_degree(census_opt_n, census_opt_N, census_n, census_N),
                              census_j, census_format);
        }
        if (app.got_subcommand(psi_cmd)) return run_psi(psi_ell, psi_m, psi_j, psi_explain);
        if (app.got_subcommand(sub_cmd)) return run_subgroups(sub_ell, sub_m, sub_list, sub_bound);
        if (app.got_subcommand(dis_cmd)) {
            return run_disjoint(resolve_degree(dis_opt_n, dis_opt_N, dis_n, dis_N), dis_j);
        }
        if (app.got_subcommand(ver_cmd)) return run_verify(options);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
