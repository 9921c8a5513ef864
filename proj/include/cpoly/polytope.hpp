#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpoly/matrix.hpp"

namespace cpoly {

/* Closed halfspace { x : normal·x >= offset }. Normals point inward. */
struct Halfspace {
    Vec normal;
    Rational offset;

    bool operator==(const Halfspace&) const = default;
};

/* Scale so the normal is integral with content 1; positive scaling only,
 * so the halfspace is unchanged. Throws on zero normal. */
Halfspace primitive_halfspace(const Halfspace& h);

struct EmptyPolytopeError : std::runtime_error {
    EmptyPolytopeError() : std::runtime_error("polytope is empty") {}
};
struct UnboundedPolytopeError : std::runtime_error {
    UnboundedPolytopeError() : std::runtime_error("polyhedron is unbounded") {}
};

/*
 * Minimal generators of the cone { y in R^dim : r·y >= 0 for all rows r },
 * computed by the incremental double description method. The cone is the
 * span of `lineality` plus nonnegative combinations of `rays`; rays are
 * primitive integral and pairwise distinct.
 */
struct ConeGenerators {
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
};
ConeGenerators dd_cone(const std::vector<Vec>& rows, std::size_t dim);

/*
 * Convex polytope with synchronized facet and vertex descriptions.
 * Vertices are sorted lexicographically; facets are primitive and sorted,
 * so equal polytopes compare equal member-wise. Facet data is only
 * maintained for full-dimensional polytopes (dim() == ambient_dim());
 * lower-dimensional ones keep their vertex description.
 */
class Polytope {
public:
    static Polytope from_hrep(const std::vector<Halfspace>& halfspaces,
                              std::size_t ambient_dim);
    static Polytope from_vrep(const std::vector<Vec>& points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }

    bool operator==(const Polytope& o) const {
        return ambient_dim_ == o.ambient_dim_ && dim_ == o.dim_ &&
               vertices_ == o.vertices_ && facets_ == o.facets_;
    }

    bool contains(const Vec& p) const;

    /* Face counts by dimension from the empty face (f_{-1} = 1) up to the
     * polytope itself; length dim()+2. */
    std::vector<long> f_vector() const;

    /* Number of edges at each vertex -> number of vertices with that count. */
    std::map<int, int> vertex_degree_histogram() const;

    /* Histogram of how many facets contain each vertex; equals the degree
     * histogram exactly when the polytope is simple. */
    std::map<int, int> vertex_facet_histogram() const;

    /* Vertex index sets of all facets, each sorted ascending. */
    std::vector<std::vector<std::size_t>> facet_vertex_incidence() const;

    bool is_lattice() const;

    /* Lattice points of the k-fold dilation; requires a full-dimensional
     * lattice polytope. Interior = all facet inequalities strict. */
    std::vector<std::vector<long>> lattice_points(long dilation = 1,
                                                  bool interior_only = false) const;

    /* Lattice polytope whose facets all have primitive inequality
     * normal·x >= -1 and whose unique interior lattice point is 0. */
    bool is_reflexive() const;

    Polytope translate(const Vec& t) const;

private:
    Polytope() = default;

    struct FaceData;
    const FaceData& face_data() const;

    std::size_t ambient_dim_ = 0;
    int dim_ = -1;
    std::vector<Vec> vertices_;
    std::vector<Halfspace> facets_;

    /* Face enumeration is expensive and the vertex and facet data of a
     * polytope never change after construction, so the derived counts are
     * computed once on demand and shared between copies. */
    mutable std::shared_ptr<const FaceData> cache_;
};

/*
 * Face-lattice isomorphism of two full-dimensional polytopes, decided on
 * the vertex-facet incidence structure (iterated refinement, then
 * backtracking). Equivalent to combinatorial equivalence of the polytopes.
 */
bool combinatorially_isomorphic(const Polytope& p, const Polytope& q);

}  // namespace cpoly
