#include "doctest.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "cpoly/equivalence.hpp"
#include "cpoly/flag.hpp"
#include "cpoly/golden.hpp"
#include "cpoly/polytope.hpp"
#include "cpoly/verify.hpp"

using namespace cpoly;

namespace {

Polytope cube3() {
    std::vector<Vec> pts;
    for (int x : {-1, 1}) {
        for (int y : {-1, 1}) {
            for (int z : {-1, 1}) {
                pts.push_back(vec_from_longs({x, y, z}));
            }
        }
    }
    return Polytope::from_vrep(pts);
}

/* A simplex with no linear symmetries, handy as a search target. */
Polytope lopsided_simplex() {
    return Polytope::from_vrep({vec_from_longs({0, 0, 0}), vec_from_longs({1, 0, 0}),
                                vec_from_longs({0, 2, 0}), vec_from_longs({0, 0, 3})});
}

}  // namespace

TEST_CASE("unimodular map predicates") {
    UnimodularMap shear{Mat::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                        vec_from_longs({0, 0, 5})};
    CHECK(is_unimodular(shear));
    CHECK(shear.apply(vec_from_longs({1, 2, 3})) == vec_from_longs({3, 2, 8}));

    UnimodularMap doubling{Mat::from_rows({{2, 0}, {0, 1}}), {}};
    CHECK(!is_unimodular(doubling));

    UnimodularMap fractional{Mat::from_rows({{1, 0}, {0, 1}}),
                             Vec{Rational(1, 2), Rational(0)}};
    CHECK(!is_unimodular(fractional));
}

TEST_CASE("applying a map and verifying it round-trip") {
    const Polytope p = lopsided_simplex();
    UnimodularMap m{Mat::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
                    vec_from_longs({4, -1, 0})};
    const Polytope q = apply_map_to_polytope(m, p);
    CHECK(verify_unimodular_map(p, q, m));
    CHECK(!verify_unimodular_map(p, p.translate(vec_from_longs({1, 0, 0})), m));
    CHECK(fingerprint(p) == fingerprint(q));
}

TEST_CASE("signed permutation search finds a known image") {
    const Polytope p = lopsided_simplex();
    /* (x, y, z) -> (-y, z, x); the search scope is linear maps, so the
     * image must not be translated. */
    UnimodularMap m{Mat::from_rows({{0, -1, 0}, {0, 0, 1}, {1, 0, 0}}), {}};
    const Polytope q = apply_map_to_polytope(m, p);
    const auto found = search_signed_permutation_map(p, q);
    REQUIRE(found.has_value());
    CHECK(verify_unimodular_map(p, q, *found));

    /* No signed permutation fixes the simplex onto its own translate by a
     * non-lattice-symmetric reflection through a skew plane. */
    const Polytope r = apply_map_to_polytope(
        UnimodularMap{Mat::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), {}}, p);
    CHECK(fingerprint(p) == fingerprint(r));
    CHECK(!search_signed_permutation_map(p, r).has_value());
}

TEST_CASE("fingerprint of the cube") {
    const Fingerprint fp = fingerprint(cube3());
    CHECK(fp.f_vector == std::vector<long>{1, 8, 12, 6, 1});
    CHECK(fp.degree_histogram == std::map<int, int>{{3, 8}});
    CHECK(fp.facet_histogram == std::map<int, int>{{3, 8}});
    CHECK(fp.facet_count == 6);
    CHECK(fp.lattice_points_d1 == 27);
    CHECK(fp.lattice_points_d2 == 125);
}

TEST_CASE("degree and facet histograms differ on a non-simple polytope") {
    /* Every vertex of the four-dimensional cross-polytope meets 6 edges
     * but 8 of the 16 facets. */
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < 4; ++i) {
        for (int s : {-1, 1}) {
            Vec v(4, Rational(0));
            v[i] = Rational(s);
            pts.push_back(v);
        }
    }
    const Polytope cross = Polytope::from_vrep(pts);
    CHECK(cross.vertex_degree_histogram() == std::map<int, int>{{6, 8}});
    CHECK(cross.vertex_facet_histogram() == std::map<int, int>{{8, 8}});
}

TEST_CASE("classification groups by certified maps") {
    const Polytope p = lopsided_simplex();
    UnimodularMap m{Mat::from_rows({{0, -1, 0}, {0, 0, 1}, {1, 0, 0}}), {}};
    REQUIRE(is_unimodular(m));
    const Polytope image = apply_map_to_polytope(m, p);
    REQUIRE(!(image == p));
    const Polytope other = cube3();

    const Classification c = classify({p, image, other});
    CHECK(c.classes == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(c.class_of == std::vector<int>{0, 0, 1});
    REQUIRE(c.witnesses.size() == 1);
    const WitnessMap& w = c.witnesses[0];
    const bool forward = w.from == 0 && w.to == 1;
    const bool backward = w.from == 1 && w.to == 0;
    CHECK((forward || backward));
    CHECK(verify_unimodular_map(c.witnesses[0].from == 0 ? p : image,
                                c.witnesses[0].from == 0 ? image : p, w.map));
}

TEST_CASE("classification separates an undecided tie only with proof") {
    /* A non-signed-permutation image has the same invariants and the same
     * face lattice, so no honest separation or certification is available
     * and classify must refuse. */
    const Polytope p = lopsided_simplex();
    UnimodularMap shear{Mat::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), {}};
    const Polytope image = apply_map_to_polytope(shear, p);
    CHECK_THROWS_AS(classify({p, image}), std::logic_error);
}

TEST_CASE("built-in catalog maps are unimodular") {
    for (const WitnessMap& w : catalog_maps()) {
        CHECK(is_unimodular(w.map));
        CHECK(w.map.linear.rows() == 6);
    }
}

TEST_CASE("stored rigorous-path matrices describe relabeled family members") {
    const auto& polys = pipeline().sl4.polytopes;

    /* The stored matrix for node 9 lists the coordinates with the last two
     * swapped relative to the transported polytope, the one for node 11
     * with the last three cycled. */
    const Polytope gp9 = gp_polytope(9);
    const UnimodularMap swap56{Mat::from_rows({{1, 0, 0, 0, 0, 0},
                                               {0, 1, 0, 0, 0, 0},
                                               {0, 0, 1, 0, 0, 0},
                                               {0, 0, 0, 1, 0, 0},
                                               {0, 0, 0, 0, 0, 1},
                                               {0, 0, 0, 0, 1, 0}}),
                               {}};
    CHECK(verify_unimodular_map(gp9, polys[9], swap56));

    const Polytope gp11 = gp_polytope(11);
    const UnimodularMap cycle456{Mat::from_rows({{1, 0, 0, 0, 0, 0},
                                                 {0, 1, 0, 0, 0, 0},
                                                 {0, 0, 1, 0, 0, 0},
                                                 {0, 0, 0, 0, 0, 1},
                                                 {0, 0, 0, 1, 0, 0},
                                                 {0, 0, 0, 0, 1, 0}}),
                                 {}};
    CHECK(verify_unimodular_map(gp11, polys[11], cycle456));

    /* In those stored coordinates the class representatives are reached by
     * signed coordinate permutations. */
    const UnimodularMap to_node2{Mat::from_rows({{0, -1, 0, 0, 0, 0},
                                                 {0, 0, -1, 0, 0, 0},
                                                 {-1, 0, 0, 0, 0, 0},
                                                 {0, 0, 0, -1, 0, 0},
                                                 {0, 0, 0, 0, 0, -1},
                                                 {0, 0, 0, 0, -1, 0}}),
                                 {}};
    CHECK(verify_unimodular_map(gp9, polys[2], to_node2));
    const UnimodularMap to_node6{Mat::from_rows({{-1, 0, 0, 0, 0, 0},
                                                 {0, 0, -1, 0, 0, 0},
                                                 {0, -1, 0, 0, 0, 0},
                                                 {0, 0, 0, 0, -1, 0},
                                                 {0, 0, 0, -1, 0, 0},
                                                 {0, 0, 0, 0, 0, -1}}),
                                 {}};
    CHECK(verify_unimodular_map(gp11, polys[6], to_node6));
}

TEST_CASE("the stored matrix for node 7 is internally inconsistent") {
    /* Taken at face value the stored halfspaces cut out a polytope with 60
     * vertices, which matches no member of the family.  Raising the entry
     * in row 6, column 11 to -1 repairs it: the repaired matrix describes
     * the node-7 polytope up to a signed coordinate permutation, and no
     * other single-entry change does. */
    const Polytope gp7 = gp_polytope(7);
    CHECK(gp7.vertices().size() == 60);
    CHECK(gp7.facets().size() == 13);
    const auto& polys = pipeline().sl4.polytopes;
    CHECK(!search_signed_permutation_map(gp7, polys[7]).has_value());

    FacetMatrix repaired = load_facet_matrix("gp_t7.json");
    REQUIRE(repaired.normals[10][5] == 0);
    repaired.normals[10][5] = -1;
    const Polytope fixed = repaired.polytope();
    CHECK(fixed.vertices().size() == 42);
    const auto w = search_signed_permutation_map(fixed, polys[7]);
    REQUIRE(w.has_value());
    CHECK(verify_unimodular_map(fixed, polys[7], *w));
}

TEST_CASE("the transported family splits into five classes") {
    const Classification& c = pipeline().classification;
    REQUIRE(c.classes.size() == 5);
    CHECK(c.classes[0] == std::vector<int>{0, 8, 12, 13});
    CHECK(c.classes[3] == std::vector<int>{4, 5});
    /* Witness maps all re-verify against the polytopes they connect. */
    const auto& polys = pipeline().sl4.polytopes;
    for (const WitnessMap& w : c.witnesses) {
        CHECK(verify_unimodular_map(polys[w.from], polys[w.to], w.map));
    }
}
