#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "cpoly/polytope.hpp"
#include "cpoly/verify.hpp"

using namespace cpoly;

namespace {

Halfspace hs(const std::vector<long>& normal, long offset) {
    return Halfspace{vec_from_longs(normal), Rational(offset)};
}

/* [-1,1]^3 as an intersection of halfspaces. */
std::vector<Halfspace> cube_hrep() {
    return {hs({1, 0, 0}, -1),  hs({-1, 0, 0}, -1), hs({0, 1, 0}, -1),
            hs({0, -1, 0}, -1), hs({0, 0, 1}, -1),  hs({0, 0, -1}, -1)};
}

}  // namespace

TEST_CASE("primitive halfspace scaling") {
    const Halfspace h = primitive_halfspace(hs({2, 4}, 6));
    CHECK(h.normal == vec_from_longs({1, 2}));
    CHECK(h.offset == Rational(3));

    const Halfspace f = primitive_halfspace(
        Halfspace{{Rational(-2, 3), Rational(4, 3)}, Rational(2)});
    CHECK(f.normal == vec_from_longs({-1, 2}));
    CHECK(f.offset == Rational(3));

    CHECK_THROWS_AS(primitive_halfspace(hs({0, 0}, 1)), std::invalid_argument);
}

TEST_CASE("dd_cone enumerates ray and lineality generators") {
    SUBCASE("single inequality leaves a lineality direction") {
        const ConeGenerators g = dd_cone({vec_from_longs({1, 0})}, 2);
        REQUIRE(g.rays.size() == 1);
        CHECK(g.rays[0] == vec_from_longs({1, 0}));
        REQUIRE(g.lineality.size() == 1);
        CHECK(g.lineality[0][0] == 0);
        CHECK(g.lineality[0][1] != 0);
    }
    SUBCASE("no constraints give the whole space") {
        const ConeGenerators g = dd_cone({}, 2);
        CHECK(g.rays.empty());
        CHECK(g.lineality.size() == 2);
    }
    SUBCASE("nonnegative quadrant is pointed") {
        ConeGenerators g = dd_cone({vec_from_longs({1, 0}), vec_from_longs({0, 1})}, 2);
        CHECK(g.lineality.empty());
        std::sort(g.rays.begin(), g.rays.end());
        CHECK(g.rays == std::vector<Vec>{vec_from_longs({0, 1}), vec_from_longs({1, 0})});
    }
}

TEST_CASE("cube from halfspaces") {
    const Polytope cube = Polytope::from_hrep(cube_hrep(), 3);
    CHECK(cube.ambient_dim() == 3);
    CHECK(cube.dim() == 3);
    CHECK(cube.vertices().size() == 8);
    CHECK(cube.facets().size() == 6);
    CHECK(cube.vertices().front() == vec_from_longs({-1, -1, -1}));
    CHECK(cube.f_vector() == std::vector<long>{1, 8, 12, 6, 1});
    CHECK(cube.vertex_degree_histogram() == std::map<int, int>{{3, 8}});
    CHECK(cube.is_lattice());
    CHECK(cube.is_reflexive());
    CHECK(cube.lattice_points().size() == 27);
    CHECK(cube.lattice_points(2).size() == 125);
    CHECK(cube.lattice_points(1, true).size() == 1);
    CHECK(cube.contains(vec_from_longs({0, 0, 0})));
    CHECK(cube.contains(vec_from_longs({1, 1, 1})));
    CHECK(!cube.contains(vec_from_longs({2, 0, 0})));
}

TEST_CASE("vertex and facet descriptions agree through both constructions") {
    const Polytope cube = Polytope::from_hrep(cube_hrep(), 3);
    const Polytope back = Polytope::from_vrep(cube.vertices());
    CHECK(back == cube);

    /* Interior and boundary points that are not vertices get filtered out. */
    std::vector<Vec> pts = cube.vertices();
    pts.push_back(vec_from_longs({0, 0, 0}));
    pts.push_back(vec_from_longs({1, 0, 0}));
    pts.push_back(Vec{Rational(1, 2), Rational(1, 2), Rational(1)});
    CHECK(Polytope::from_vrep(pts) == cube);
}

TEST_CASE("redundant halfspaces are not reported as facets") {
    std::vector<Halfspace> hrep = cube_hrep();
    hrep.push_back(hs({1, 1, 1}, -5));               // slack everywhere
    hrep.push_back(hs({2, 0, 0}, -2));               // duplicate of a facet
    const Polytope p = Polytope::from_hrep(hrep, 3);
    CHECK(p == Polytope::from_hrep(cube_hrep(), 3));
    CHECK(p.facets().size() == 6);
}

TEST_CASE("cross-polytope from vertices") {
    std::vector<Vec> pts;
    for (int d = 0; d < 3; ++d) {
        for (int s : {-1, 1}) {
            Vec v = vec_from_longs({0, 0, 0});
            v[d] = s;
            pts.push_back(v);
        }
    }
    const Polytope oct = Polytope::from_vrep(pts);
    CHECK(oct.vertices().size() == 6);
    CHECK(oct.facets().size() == 8);
    CHECK(oct.f_vector() == std::vector<long>{1, 6, 12, 8, 1});
    CHECK(oct.vertex_degree_histogram() == std::map<int, int>{{4, 6}});
    CHECK(oct.is_reflexive());
    CHECK(oct.lattice_points().size() == 7);
}

TEST_CASE("simplex is a lattice polytope but not reflexive") {
    const Polytope simplex = Polytope::from_vrep(
        {vec_from_longs({0, 0, 0}), vec_from_longs({1, 0, 0}),
         vec_from_longs({0, 1, 0}), vec_from_longs({0, 0, 1})});
    CHECK(simplex.is_lattice());
    CHECK(!simplex.is_reflexive());
    CHECK(simplex.f_vector() == std::vector<long>{1, 4, 6, 4, 1});
}

TEST_CASE("non-lattice vertices are detected") {
    const Polytope p = Polytope::from_vrep(
        {Vec{Rational(1, 2), Rational(0)}, Vec{Rational(-1, 2), Rational(0)},
         vec_from_longs({0, 1}), vec_from_longs({0, -1})});
    CHECK(!p.is_lattice());
    CHECK(!p.is_reflexive());
}

TEST_CASE("empty and unbounded systems are rejected") {
    CHECK_THROWS_AS(Polytope::from_hrep({hs({1}, 1), hs({-1}, 1)}, 1),
                    EmptyPolytopeError);
    CHECK_THROWS_AS(Polytope::from_hrep({hs({1}, 0)}, 1), UnboundedPolytopeError);
    CHECK_THROWS_AS(Polytope::from_hrep({hs({1, 0}, 0), hs({-1, 0}, -1)}, 2),
                    UnboundedPolytopeError);
    CHECK_THROWS_AS(Polytope::from_vrep({}), EmptyPolytopeError);
}

TEST_CASE("lower-dimensional intersections keep vertices only") {
    const std::vector<Halfspace> square_in_plane = {
        hs({1, 0, 0}, 0),  hs({-1, 0, 0}, -1), hs({0, 1, 0}, 0),
        hs({0, -1, 0}, -1), hs({0, 0, 1}, 0),  hs({0, 0, -1}, 0)};
    const Polytope flat = Polytope::from_hrep(square_in_plane, 3);
    CHECK(flat.dim() == 2);
    CHECK(flat.vertices().size() == 4);
    CHECK(flat.facets().empty());
    CHECK_THROWS_AS(flat.contains(vec_from_longs({0, 0, 0})), std::logic_error);

    CHECK_THROWS_AS(Polytope::from_vrep({vec_from_longs({0, 0}),
                                         vec_from_longs({1, 0})}),
                    std::invalid_argument);
}

TEST_CASE("translation shifts both descriptions consistently") {
    const Polytope cube = Polytope::from_hrep(cube_hrep(), 3);
    const Vec t = vec_from_longs({1, 0, -2});
    const Polytope moved = cube.translate(t);
    CHECK(moved.vertices().front() == vec_from_longs({0, -1, -3}));
    CHECK(moved.contains(t));
    CHECK(!moved.is_reflexive());
    CHECK(moved.translate(scale(Rational(-1), t)) == cube);
    /* Face counts are translation invariant. */
    CHECK(moved.f_vector() == cube.f_vector());
    CHECK(moved.vertex_degree_histogram() == cube.vertex_degree_histogram());
}

TEST_CASE("truncating a cube corner") {
    std::vector<Halfspace> hrep = cube_hrep();
    hrep.push_back(hs({1, 1, 1}, -2));  // slices off the corner (-1,-1,-1)
    const Polytope p = Polytope::from_hrep(hrep, 3);
    CHECK(p.vertices().size() == 10);
    CHECK(p.facets().size() == 7);
    CHECK(p.f_vector() == std::vector<long>{1, 10, 15, 7, 1});
    CHECK(p.vertex_degree_histogram() == std::map<int, int>{{3, 10}});
}

TEST_CASE("vertex enumeration agrees with the square-subsystem oracle") {
    std::mt19937 rng(911u);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Halfspace> hrep = cube_hrep();
        for (int extra = 0; extra < 3; ++extra) {
            std::vector<long> n(3);
            do {
                for (long& x : n) x = entry(rng);
            } while (n[0] == 0 && n[1] == 0 && n[2] == 0);
            hrep.push_back(hs(n, -3));  // keeps the origin interior
        }
        const Polytope p = Polytope::from_hrep(hrep, 3);
        std::vector<Vec> expect = vertex_oracle(hrep, 3);
        std::sort(expect.begin(), expect.end());
        CHECK(p.vertices() == expect);
    }
}

TEST_CASE("combinatorial isomorphism") {
    const Polytope cube = Polytope::from_hrep(cube_hrep(), 3);

    /* A sheared copy is combinatorially the same cube. */
    std::vector<Vec> sheared;
    for (const Vec& v : cube.vertices()) {
        sheared.push_back(Vec{v[0] + v[1], v[1], v[2]});
    }
    CHECK(combinatorially_isomorphic(cube, Polytope::from_vrep(sheared)));

    std::vector<Vec> oct_pts;
    for (int d = 0; d < 3; ++d) {
        for (int s : {-1, 1}) {
            Vec v = vec_from_longs({0, 0, 0});
            v[d] = s;
            oct_pts.push_back(v);
        }
    }
    const Polytope oct = Polytope::from_vrep(oct_pts);
    CHECK(!combinatorially_isomorphic(cube, oct));
    CHECK(combinatorially_isomorphic(oct, oct));
}
