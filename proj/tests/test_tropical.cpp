#include "doctest.h"

#include <random>
#include <vector>

#include "cpoly/flag.hpp"
#include "cpoly/golden.hpp"
#include "cpoly/polytope.hpp"
#include "cpoly/seed.hpp"
#include "cpoly/tropical.hpp"

using namespace cpoly;

namespace {

Seed two_by_two() {
    Seed s;
    s.n = 2;
    s.unfrozen = {1, 2};
    s.eps = {{0, 1}, {-1, 0}};
    return s;
}

}  // namespace

TEST_CASE("branch matrices differ from the identity only in one column") {
    const Seed s = load_reference_seeds().sl4[0];
    for (int k : s.unfrozen) {
        const TropicalMap m = tropical_map(s, k);
        const std::size_t kc = static_cast<std::size_t>(k) - 1;
        CHECK(m.t_plus.det() == Rational(-1));
        CHECK(m.t_minus.det() == Rational(-1));
        CHECK(m.t_plus(kc, kc) == Rational(-1));
        CHECK(m.t_minus(kc, kc) == Rational(-1));
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                if (j == kc) continue;
                const Rational expect = (i == j) ? 1 : 0;
                CHECK(m.t_plus(i, j) == expect);
                CHECK(m.t_minus(i, j) == expect);
            }
        }
    }
}

TEST_CASE("the two branches agree on the dividing hyperplane") {
    const Seed s = load_reference_seeds().sl4[0];
    std::mt19937 rng(7u);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int k : s.unfrozen) {
        const TropicalMap m = tropical_map(s, k);
        for (int rep = 0; rep < 20; ++rep) {
            Vec x(6);
            for (Rational& c : x) c = Rational(entry(rng));
            x[static_cast<std::size_t>(k) - 1] = 0;
            CHECK(m.t_plus * x == m.t_minus * x);
        }
    }
}

TEST_CASE("mutating twice in the same direction undoes the map pointwise") {
    const Seed s = load_reference_seeds().sl4[0];
    std::mt19937 rng(99u);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int k : s.unfrozen) {
        const TropicalMap fwd = tropical_map(s, k);
        const TropicalMap back = tropical_map(mutate(s, k), k);
        for (int rep = 0; rep < 50; ++rep) {
            Vec x(6);
            for (Rational& c : x) c = Rational(entry(rng));
            CHECK(apply_pwl(back, apply_pwl(fwd, x)) == x);
        }
    }
}

TEST_CASE("piecewise-linear image of a square") {
    const Seed s = two_by_two();
    const TropicalMap m = tropical_map(s, 1);
    const Polytope square = Polytope::from_vrep(
        {vec_from_longs({-1, -1}), vec_from_longs({-1, 1}),
         vec_from_longs({1, -1}), vec_from_longs({1, 1})});
    const Polytope image = apply_tropical(m, square);

    /* Hand computation: the right half maps by (x, y) -> (-x, x + y), the
     * left half by (x, y) -> (-x, y). */
    const Polytope expect = Polytope::from_vrep(
        {vec_from_longs({-1, 0}), vec_from_longs({-1, 2}),
         vec_from_longs({0, -1}), vec_from_longs({1, -1}),
         vec_from_longs({1, 1})});
    CHECK(image == expect);

    /* Mapped vertices of the original stay inside the image. */
    for (const Vec& v : square.vertices()) {
        CHECK(image.contains(apply_pwl(m, v)));
    }

    /* The two image pieces form a non-convex union, so taking the hull
     * before mapping back adds the hull point (0, 3/2) and its preimage:
     * the reverse transport returns a pentagon containing the square. */
    const TropicalMap back = tropical_map(mutate(s, 1), 1);
    const Polytope round_trip = apply_tropical(back, image);
    const Polytope pentagon = Polytope::from_vrep(
        {vec_from_longs({-1, -1}), vec_from_longs({-1, 1}), vec_from_longs({1, -1}),
         vec_from_longs({1, 1}), {Rational(0), Rational(3, 2)}});
    CHECK(round_trip == pentagon);
    for (const Vec& v : square.vertices()) {
        CHECK(round_trip.contains(v));
    }
}

TEST_CASE("polytope transport is reversible along a mutation") {
    const Seed s = load_reference_seeds().sl3;
    const Polytope base = base_polytope_sl3();
    const TropicalMap fwd = tropical_map(s, 1);
    const Polytope moved = apply_tropical(fwd, base);
    CHECK(moved.dim() == base.dim());
    const TropicalMap back = tropical_map(mutate(s, 1), 1);
    CHECK(apply_tropical(back, moved) == base);
}
