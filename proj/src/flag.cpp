#include "cpoly/flag.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cpoly {

std::vector<Halfspace> string_inequalities_i0(const std::array<long, 3>& lambda) {
    const long l1 = lambda[0], l2 = lambda[1], l3 = lambda[2];
    /* Each pair below is the lower and upper bound of one chained
     * inequality 0 <= a1 <= ..., a3 <= a2 <= ..., and so on. */
    const std::vector<std::pair<std::vector<long>, long>> rows = {
        {{1, 0, 0, 0, 0, 0}, 0},     {{-1, 1, -2, 0, 1, -2}, -l1},
        {{0, 1, -1, 0, 0, 0}, 0},    {{0, -1, 1, 1, -2, 1}, -l2},
        {{0, 0, 1, 0, 0, 0}, 0},     {{0, 0, -1, 0, 1, -2}, -l1},
        {{0, 0, 0, 1, -1, 0}, 0},    {{0, 0, 0, -1, 1, 0}, -l3},
        {{0, 0, 0, 0, 1, -1}, 0},    {{0, 0, 0, 0, -1, 1}, -l2},
        {{0, 0, 0, 0, 0, 1}, 0},     {{0, 0, 0, 0, 0, -1}, -l1},
    };
    std::vector<Halfspace> out;
    for (const auto& [n, c] : rows) {
        out.push_back(Halfspace{vec_from_longs(n), Rational(c)});
    }
    return out;
}

Polytope string_polytope_i0(const std::array<long, 3>& lambda) {
    return Polytope::from_hrep(string_inequalities_i0(lambda), 6);
}

Mat m_matrix_i0() {
    return Mat::from_rows({
        {1, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0},
        {0, 1, 1, 0, 0, 0},
        {1, 1, 0, 1, 0, 0},
        {0, 1, 1, 1, 1, 0},
        {0, 0, 0, 1, 1, 1},
    });
}

namespace {

Vec to_rational_vec(const std::vector<long>& p) { return vec_from_longs(p); }

}  // namespace

Polytope transported_string_polytope() {
    /* Push the string halfspaces through M, then recenter so that the
     * unique interior lattice point sits at the origin. */
    const Mat m = m_matrix_i0();
    std::vector<Halfspace> pushed;
    for (const Halfspace& h : string_inequalities_i0({2, 2, 2})) {
        pushed.push_back(Halfspace{m * h.normal, h.offset});
    }
    const Polytope raw = Polytope::from_hrep(pushed, 6);

    const auto interior = raw.lattice_points(1, /*interior_only=*/true);
    if (interior.size() != 1) {
        throw std::logic_error("transported string polytope: interior lattice point not unique");
    }
    return raw.translate(scale(Rational(-1), to_rational_vec(interior[0])));
}

Polytope base_polytope_sl4() {
    const Polytope centered = transported_string_polytope();
    const Polytope reference = load_facet_matrix("eq2_2.json").polytope();
    if (!(centered == reference)) {
        throw std::logic_error("transported string polytope disagrees with the stored base polytope");
    }
    return centered;
}

Polytope base_polytope_sl3() {
    return load_facet_matrix("sl3.json").polytope();
}

Polytope gp_polytope(int label) {
    if (label != 7 && label != 9 && label != 11) {
        throw std::invalid_argument("gp_polytope: no stored polytope for this label");
    }
    std::ostringstream name;
    name << "gp_t" << label << ".json";
    return load_facet_matrix(name.str()).polytope();
}

namespace {

/* Labeled mutation graph on a given list of pairwise inequivalent seeds:
 * every mutation of every seed must match one of them up to relabeling. */
ExchangeGraph labeled_graph(const std::vector<Seed>& seeds) {
    ExchangeGraph g;
    g.nodes = seeds;
    g.neighbors.resize(seeds.size());
    for (std::size_t a = 0; a < seeds.size(); ++a) {
        for (int k : seeds[a].unfrozen) {
            const Seed t = mutate(seeds[a], k);
            int target = -1;
            for (std::size_t b = 0; b < seeds.size(); ++b) {
                if (relabeling_between(t, seeds[b]).has_value()) {
                    if (target >= 0) {
                        throw std::logic_error("mutated seed matches two stored seeds");
                    }
                    target = static_cast<int>(b);
                }
            }
            if (target < 0) {
                throw std::logic_error("mutated seed matches no stored seed");
            }
            g.neighbors[a][k] = target;
        }
    }
    std::set<std::pair<int, int>> done;
    for (std::size_t a = 0; a < g.neighbors.size(); ++a) {
        for (const auto& [k, b] : g.neighbors[a]) {
            const int lo = std::min(static_cast<int>(a), b);
            const int hi = std::max(static_cast<int>(a), b);
            if (!done.insert({lo, hi}).second) continue;
            GraphEdge e;
            e.a = lo;
            e.b = hi;
            for (const auto& [ka, ta] : g.neighbors[static_cast<std::size_t>(lo)]) {
                if (ta == hi) e.dir_a = ka;
            }
            for (const auto& [kb, tb] : g.neighbors[static_cast<std::size_t>(hi)]) {
                if (tb == lo) e.dir_b = kb;
            }
            g.edges.push_back(e);
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return g;
}

TransportedFamily transport_family(const std::vector<Seed>& seeds, const TransportTree& tree,
                                   Polytope base) {
    TransportedFamily fam;
    fam.graph = labeled_graph(seeds);

    /* The tree must reproduce every stored seed exactly, not merely up to
     * relabeling; transported coordinates depend on that. */
    for (const TreeEdge& e : tree.edges) {
        if (!(mutate(seeds[static_cast<std::size_t>(e.parent)], e.k) ==
              seeds[static_cast<std::size_t>(e.node)])) {
            throw std::logic_error("spanning tree does not reproduce the stored seeds");
        }
    }

    fam.polytopes.assign(seeds.size(), base);
    for (const TreeEdge& e : tree.edges) {
        const Seed& parent = seeds[static_cast<std::size_t>(e.parent)];
        fam.polytopes[static_cast<std::size_t>(e.node)] = apply_tropical(
            tropical_map(parent, e.k), fam.polytopes[static_cast<std::size_t>(e.parent)]);
    }

    /* Every directed edge outside the tree must transport one polytope
     * onto the other, after the coordinate relabeling that matches the
     * mutated seed with the stored one. */
    std::set<std::pair<int, int>> tree_edges;
    for (const TreeEdge& e : tree.edges) {
        tree_edges.insert({e.parent, e.node});
        tree_edges.insert({e.node, e.parent});
    }
    for (std::size_t a = 0; a < seeds.size(); ++a) {
        for (const auto& [k, b] : fam.graph.neighbors[a]) {
            if (tree_edges.count({static_cast<int>(a), b})) continue;
            const Polytope q = apply_tropical(tropical_map(seeds[a], k), fam.polytopes[a]);
            const Seed mutated = mutate(seeds[a], k);
            bool consistent = false;
            for (const Perm& sigma :
                 all_relabelings_between(mutated, seeds[static_cast<std::size_t>(b)])) {
                std::vector<Vec> mapped;
                for (const Vec& v : q.vertices()) mapped.push_back(relabel_point(v, sigma));
                std::sort(mapped.begin(), mapped.end());
                if (mapped == fam.polytopes[static_cast<std::size_t>(b)].vertices()) {
                    consistent = true;
                    break;
                }
            }
            if (!consistent) {
                throw std::logic_error("transport along a non-tree edge is inconsistent");
            }
        }
    }
    return fam;
}

}  // namespace

TransportedFamily compute_family_sl4() {
    const LabeledSeeds seeds = load_reference_seeds();
    return transport_family(seeds.sl4, load_transport_tree(), base_polytope_sl4());
}

TransportedFamily compute_family_sl3() {
    const LabeledSeeds stored = load_reference_seeds();
    const std::vector<Seed> seeds = {stored.sl3, mutate(stored.sl3, 1)};
    TransportTree tree;
    tree.root = 0;
    tree.edges.push_back(TreeEdge{1, 0, 1});
    return transport_family(seeds, tree, base_polytope_sl3());
}

ExchangeGraph labeled_graph_sl4() { return labeled_graph(load_reference_seeds().sl4); }

ExchangeGraph labeled_graph_sl3() {
    const LabeledSeeds stored = load_reference_seeds();
    return labeled_graph({stored.sl3, mutate(stored.sl3, 1)});
}

}  // namespace cpoly
