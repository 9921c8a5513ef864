#pragma once

/* Tropicalized mutation. Mutation in an unfrozen direction k acts on
 * coordinate vectors g piecewise linearly:
 *
 *   g'_k = -g_k,
 *   g'_j = g_j + [-eps(k,j)]_+ g_k + eps(k,j) [g_k]_+   (j != k),
 *
 * with [t]_+ = max(t, 0). On each side of the hyperplane g_k = 0 this is
 * one linear map, and both maps agree on the hyperplane.
 */

#include "cpoly/matrix.hpp"
#include "cpoly/polytope.hpp"
#include "cpoly/seed.hpp"

namespace cpoly {

struct TropicalMap {
    int k = 0;    // 1-based mutated coordinate
    Mat t_plus;   // linear piece on g_k >= 0
    Mat t_minus;  // linear piece on g_k <= 0
};

TropicalMap tropical_map(const Seed& s, int k);

/* Value of the piecewise-linear map at a single point. */
Vec apply_pwl(const TropicalMap& m, const Vec& x);

/* Image of a full-dimensional polytope: cut along g_k = 0, map each closed
 * piece by its linear branch, and take the convex hull of the union. */
Polytope apply_tropical(const TropicalMap& m, const Polytope& p);

}  // namespace cpoly
