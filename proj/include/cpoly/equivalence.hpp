#pragma once

/* Unimodular equivalence of lattice polytopes: integral affine maps with
 * determinant of absolute value one. The classification routine groups a
 * family of polytopes by invariant fingerprints, then certifies each group
 * with explicit maps, either drawn from a small built-in catalog or found
 * by searching the signed coordinate permutations.
 */

#include <map>
#include <optional>
#include <vector>

#include "cpoly/matrix.hpp"
#include "cpoly/polytope.hpp"

namespace cpoly {

struct UnimodularMap {
    Mat linear;
    Vec shift;  // integral; empty means zero

    Vec apply(const Vec& x) const;
};

bool is_unimodular(const UnimodularMap& m);

Polytope apply_map_to_polytope(const UnimodularMap& m, const Polytope& p);

/* True when the map is unimodular and carries the vertex set of p exactly
 * onto the vertex set of q. */
bool verify_unimodular_map(const Polytope& p, const Polytope& q, const UnimodularMap& m);

/* Search the 2^d d! signed coordinate permutations for a linear map
 * carrying p onto q; returns the first verified hit. */
std::optional<UnimodularMap> search_signed_permutation_map(const Polytope& p,
                                                           const Polytope& q);

/* Invariants under unimodular equivalence, compared exactly. */
struct Fingerprint {
    std::vector<long> f_vector;
    std::map<int, int> degree_histogram;
    std::map<int, int> facet_histogram;  // facets per vertex
    std::size_t facet_count = 0;
    long lattice_points_d1 = 0;  // lattice point count of the polytope
    long lattice_points_d2 = 0;  // and of its second dilation

    bool operator==(const Fingerprint&) const = default;
    bool operator<(const Fingerprint& o) const;
};

Fingerprint fingerprint(const Polytope& p);

struct WitnessMap {
    int from = 0, to = 0;
    UnimodularMap map;
};

/* The five explicit signed-permutation maps between specific nodes of the
 * 14-polytope family. */
std::vector<WitnessMap> catalog_maps();

struct Classification {
    std::vector<std::vector<int>> classes;  // sorted members, ordered by least member
    std::vector<int> class_of;              // node -> index into classes
    std::vector<WitnessMap> witnesses;      // verified maps spanning each class
};

/* Partition the polytopes into unimodular equivalence classes. Distinct
 * fingerprints separate classes; within a fingerprint group every node
 * must be reached by a verified witness map, or the call throws. */
Classification classify(const std::vector<Polytope>& polytopes);

}  // namespace cpoly
