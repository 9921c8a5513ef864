#pragma once

/* Newton-Okounkov polytopes of full flag varieties in types A2 and A3.
 *
 * The A3 base polytope is produced two independent ways: from the string
 * inequalities for the word (1,2,1,3,2,1) pushed through the linear map
 * M and recentered at its interior lattice point, and from the facet
 * matrix stored with the reference data. The constructors compare the two
 * and refuse to return on any disagreement. All other polytopes in the
 * family are transported from the base along mutation paths.
 */

#include <array>

#include "cpoly/golden.hpp"
#include "cpoly/matrix.hpp"
#include "cpoly/polytope.hpp"
#include "cpoly/seed.hpp"
#include "cpoly/tropical.hpp"

namespace cpoly {

/* The twelve halfspaces cutting out the string polytope of the word
 * (1,2,1,3,2,1) for a dominant weight with coefficients lambda. */
std::vector<Halfspace> string_inequalities_i0(const std::array<long, 3>& lambda);

Polytope string_polytope_i0(const std::array<long, 3>& lambda);

/* Unimodular map carrying the string polytope onto the Newton-Okounkov
 * polytope: facet normals transform by u -> M u. */
Mat m_matrix_i0();

/* String polytope for lambda = (2,2,2) pushed through M and recentered at
 * its unique interior lattice point. No comparison against stored data. */
Polytope transported_string_polytope();

Polytope base_polytope_sl4();
Polytope base_polytope_sl3();

/* Reference polytopes at the mutation-graph nodes 7, 9 and 11. */
Polytope gp_polytope(int label);

/* The whole family: the labeled mutation graph together with one polytope
 * per node, transported from the base along a spanning tree and checked
 * for consistency along every remaining directed edge (up to the
 * relabeling that matches the mutated seed with the stored one). */
struct TransportedFamily {
    ExchangeGraph graph;
    std::vector<Polytope> polytopes;
};

TransportedFamily compute_family_sl4();
TransportedFamily compute_family_sl3();

/* Label-aligned mutation graphs alone, without transporting polytopes. */
ExchangeGraph labeled_graph_sl4();
ExchangeGraph labeled_graph_sl3();

}  // namespace cpoly
