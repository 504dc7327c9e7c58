#pragma once

// The census engine: counts disjoint Galois subspaces, produces the full
// component census of the Galois-subspace locus for an embedding of degree n
// (dimensions, multiplicities, bundle descriptors), and computes the degrees
// of the endomorphisms eps_{xi,m} that control the q-class counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galocus/stable_count.hpp"

namespace galocus {

struct Constituent {
    int ell = 2;
    std::uint64_t h_order = 1;    // |H| = s / ell
    std::uint64_t psi_count = 0;  // components contributed by this class

    friend bool operator==(const Constituent&, const Constituent&) = default;
};

struct ComponentRecord {
    std::uint64_t dimension = 0;    // n - s
    std::uint64_t count = 0;
    std::uint64_t group_order = 0;  // s
    std::vector<Constituent> constituents;
    // Positive-dimensional components are P^(n-s-1)-bundles over E/H.
    std::optional<std::uint64_t> fiber_dim;  // n - s - 1
    std::optional<std::string> base;         // "E/H"

    friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct CensusReport {
    std::uint64_t n = 3;
    JClass j = JClass::Generic;
    std::vector<ComponentRecord> records;  // descending dimension, no zero rows
    std::uint64_t total_components = 0;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct DisjointClass {
    int ell = 2;
    std::uint64_t h_order = 1;
    std::uint64_t psi_count = 0;     // xi-stable subgroups H of order n/ell
    std::uint64_t groups_per_h = 1;  // deg eps / |H| distinct q-classes

    friend bool operator==(const DisjointClass&, const DisjointClass&) = default;
};

// Degree of eps_{xi,m} (mx, m(2+xi)x, 2m(1+xi)x, 6m xi x for ell = 2,3,4,6),
// computed as the determinant of the integer-matrix substitution. Closed
// forms m^2, 3m^2, 8m^2, 36m^2 are asserted in the test suites.
std::uint64_t deg_epsilon(int ell, std::uint64_t m);

// deg eps_{xi,m} / m; the division is always exact.
std::uint64_t groups_per_translation_subgroup(int ell, std::uint64_t m);

// Number of disjoint Galois subspaces for a degree-n embedding:
// (n/2) psi_2(n/2) + n psi_3(n/3) + 2n psi_4(n/4) + 6n psi_6(n/6),
// with non-integer arguments contributing 0. Requires n >= 3.
std::uint64_t disjoint_count(JClass j, std::uint64_t n);

// Per admissible ell dividing n: the stable-subgroup count and the number of
// q-classes per H. The grand total sum(psi * groups_per_h) equals
// disjoint_count(j, n).
std::vector<DisjointClass> disjoint_group_inventory(JClass j, std::uint64_t n);

// One record per group order s with a nonzero component count: dimension
// n-s, count sum_{ell | s} psi_ell(s/ell) for s < n and the disjoint count
// for s = n. Records sorted by descending dimension.
CensusReport component_census(JClass j, std::uint64_t n);

}  // namespace galocus
