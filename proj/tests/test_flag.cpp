#include "doctest.h"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "cpoly/flag.hpp"
#include "cpoly/golden.hpp"
#include "cpoly/seed.hpp"
#include "cpoly/tropical.hpp"
#include "cpoly/verify.hpp"

using namespace cpoly;

TEST_CASE("string polytope at the doubled fundamental weights") {
    const Polytope p = string_polytope_i0({2, 2, 2});
    CHECK(p.dim() == 6);
    CHECK(p.vertices().size() == 40);
    CHECK(p.facets().size() == 12);
    CHECK(p.is_lattice());
}

TEST_CASE("string polytope offsets scale linearly in the weight") {
    const Polytope half = string_polytope_i0({1, 1, 1});
    const Polytope full = string_polytope_i0({2, 2, 2});
    std::vector<Vec> doubled;
    for (const Vec& v : half.vertices()) doubled.push_back(scale(Rational(2), v));
    CHECK(doubled == full.vertices());
}

TEST_CASE("string polytope at the zero weight is the origin") {
    const Polytope p = string_polytope_i0({0, 0, 0});
    CHECK(p.dim() == 0);
    CHECK(p.vertices() == std::vector<Vec>{Vec(6, Rational(0))});
}

TEST_CASE("weight change of basis is unimodular") {
    CHECK(m_matrix_i0().det() == Rational(1));
    CHECK(m_matrix_i0().is_integral());
}

TEST_CASE("transported string polytope equals the stored facet matrix") {
    const Polytope base = base_polytope_sl4();
    CHECK(base == load_facet_matrix("eq2_2.json").polytope());
    CHECK(base == transported_string_polytope());
    CHECK(base.is_reflexive());
    CHECK(base.vertices().size() == 40);
    CHECK(base.facets().size() == 12);
    for (const CaseFVector& c : load_case_f_vectors()) {
        if (c.case_id == 1) CHECK(base.f_vector() == c.f_vector);
    }
}

TEST_CASE("three-dimensional base polytope") {
    const Polytope p = base_polytope_sl3();
    CHECK(p.dim() == 3);
    CHECK(p.facets().size() == 6);
    CHECK(p.is_reflexive());
}

TEST_CASE("one transport step away from the base") {
    /* The transport tree moves from the root to node 7 by direction 3. */
    const Seed s0 = load_reference_seeds().sl4[0];
    const Polytope moved =
        apply_tropical(tropical_map(s0, 3), base_polytope_sl4());
    CHECK(moved == pipeline().sl4.polytopes[7]);
    CHECK(moved.is_reflexive());
    CHECK(moved.vertices().size() == 42);
    CHECK(moved.facets().size() == 13);
}

TEST_CASE("transported family over the whole mutation graph") {
    const TransportedFamily& fam = pipeline().sl4;
    REQUIRE(fam.graph.nodes.size() == 14);
    REQUIRE(fam.polytopes.size() == 14);

    const LabeledSeeds seeds = load_reference_seeds();
    for (std::size_t i = 0; i < fam.graph.nodes.size(); ++i) {
        CHECK(fam.graph.nodes[i] == seeds.sl4[i]);
    }
    for (const Polytope& p : fam.polytopes) {
        CHECK(p.dim() == 6);
        CHECK(p.is_reflexive());
    }
    CHECK(fam.polytopes[0] == base_polytope_sl4());

    /* The labeled graph agrees with the stored edge list. Edges are
     * undirected; the stored list orients some pairs high-to-low, so both
     * sides are normalized before comparing. */
    const LabeledGraph ref = load_reference_graph();
    std::vector<std::pair<int, int>> got;
    for (const GraphEdge& e : fam.graph.edges) got.emplace_back(e.a, e.b);
    std::vector<std::pair<int, int>> want;
    for (auto [a, b] : ref.edges) want.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("transported family for the smaller group") {
    const TransportedFamily& fam = pipeline().sl3;
    REQUIRE(fam.graph.nodes.size() == 2);
    REQUIRE(fam.polytopes.size() == 2);
    CHECK(fam.polytopes[0] == base_polytope_sl3());
    for (const Polytope& p : fam.polytopes) {
        CHECK(p.dim() == 3);
        CHECK(p.is_reflexive());
    }
}
