#pragma once

/* Seeds for mutation: a rectangular integer exchange matrix whose rows are
 * indexed by the unfrozen subset of J = {1, ..., n} and whose columns are
 * indexed by all of J. Two seeds are regarded as equal when a permutation
 * of J fixing every frozen index carries one matrix to the other.
 */

#include <map>
#include <optional>
#include <vector>

#include "cpoly/matrix.hpp"

namespace cpoly {

struct Seed {
    int n = 0;
    std::vector<int> unfrozen;           // 1-based labels, strictly increasing
    std::vector<std::vector<long>> eps;  // one row per unfrozen label, n columns

    bool operator==(const Seed&) const = default;

    int row_of(int label) const;        // row index of an unfrozen label
    bool is_unfrozen(int label) const;
    long at(int i, int j) const;        // entry for unfrozen row label i, column j
};

/* Matrix mutation in direction k (an unfrozen label):
 * entries in row k or column k flip sign, and otherwise
 * eps'(i,j) = eps(i,j) + sgn(eps(i,k)) * max(eps(i,k) * eps(k,j), 0). */
Seed mutate(const Seed& s, int k);

/* Permutations of J as arrays of images; sigma[0] is unused filler so that
 * sigma[i] is the image of label i. */
using Perm = std::vector<int>;

Perm identity_perm(int n);

/* Relabeled seed: entry at (sigma(i), sigma(j)) equals the old entry at
 * (i, j). sigma must map unfrozen labels to unfrozen labels. */
Seed relabel_seed(const Seed& s, const Perm& sigma);

/* Relabeled coordinate vector: new component sigma(j) is old component j. */
Vec relabel_point(const Vec& x, const Perm& sigma);

std::vector<Perm> frozen_fixing_perms(const Seed& s);

/* First (respectively, every) frozen-fixing permutation with
 * relabel_seed(a, sigma) == b. */
std::optional<Perm> relabeling_between(const Seed& a, const Seed& b);
std::vector<Perm> all_relabelings_between(const Seed& a, const Seed& b);

/* Lexicographically least relabeling of the matrix; equal canonical forms
 * characterize seed equality up to relabeling. */
std::vector<std::vector<long>> canonical_eps(const Seed& s);

struct GraphEdge {
    int a = 0, b = 0;       // endpoints with a < b
    int dir_a = 0;          // mutating nodes[a] in this direction reaches nodes[b]
    int dir_b = 0;          // and conversely
};

struct ExchangeGraph {
    std::vector<Seed> nodes;
    std::vector<std::map<int, int>> neighbors;  // per node: direction -> node
    std::vector<GraphEdge> edges;

    std::vector<std::vector<int>> adjacency() const;
};

ExchangeGraph build_exchange_graph(const Seed& start, std::size_t max_nodes = 100000);

bool graphs_isomorphic(const std::vector<std::vector<int>>& adj_a,
                       const std::vector<std::vector<int>>& adj_b);

/* Every automorphism of the graph that preserves the given node coloring,
 * as image arrays, in lexicographic order. */
std::vector<std::vector<int>> graph_automorphisms(const std::vector<std::vector<int>>& adj,
                                                  const std::vector<int>& color);

}  // namespace cpoly
