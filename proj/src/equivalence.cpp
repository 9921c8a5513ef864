#include "cpoly/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cpoly {

Vec UnimodularMap::apply(const Vec& x) const {
    Vec y = linear * x;
    if (!shift.empty()) y = add(y, shift);
    return y;
}

bool is_unimodular(const UnimodularMap& m) {
    if (!m.linear.is_square() || !m.linear.is_integral()) return false;
    const Rational d = m.linear.det();
    if (d != 1 && d != -1) return false;
    for (const Rational& x : m.shift) {
        if (!is_integer(x)) return false;
    }
    return true;
}

Polytope apply_map_to_polytope(const UnimodularMap& m, const Polytope& p) {
    std::vector<Vec> images;
    for (const Vec& v : p.vertices()) images.push_back(m.apply(v));
    return Polytope::from_vrep(images);
}

bool verify_unimodular_map(const Polytope& p, const Polytope& q, const UnimodularMap& m) {
    if (!is_unimodular(m)) return false;
    std::vector<Vec> images;
    for (const Vec& v : p.vertices()) images.push_back(m.apply(v));
    std::sort(images.begin(), images.end());
    return images == q.vertices();
}

namespace {

std::vector<std::vector<long>> integral_vertices(const Polytope& p) {
    std::vector<std::vector<long>> out;
    for (const Vec& v : p.vertices()) out.push_back(vec_to_longs(v));
    return out;
}

}  // namespace

std::optional<UnimodularMap> search_signed_permutation_map(const Polytope& p,
                                                           const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim() ||
        p.vertices().size() != q.vertices().size()) {
        return std::nullopt;
    }
    const std::size_t d = p.ambient_dim();
    const auto vp = integral_vertices(p);
    auto vq = integral_vertices(q);
    std::sort(vq.begin(), vq.end());

    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long> image(d);
    do {
        for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
            bool all_in = true;
            for (const auto& v : vp) {
                for (std::size_t i = 0; i < d; ++i) {
                    const long x = v[perm[i]];
                    image[i] = (mask >> i) & 1 ? -x : x;
                }
                if (!std::binary_search(vq.begin(), vq.end(), image)) {
                    all_in = false;
                    break;
                }
            }
            if (!all_in) continue;
            UnimodularMap m;
            m.linear = Mat(d, d);
            for (std::size_t i = 0; i < d; ++i) {
                m.linear(i, perm[i]) = ((mask >> i) & 1) ? -1 : 1;
            }
            if (verify_unimodular_map(p, q, m)) return m;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
    return std::tie(f_vector, facet_count, lattice_points_d1, lattice_points_d2,
                    degree_histogram, facet_histogram) <
           std::tie(o.f_vector, o.facet_count, o.lattice_points_d1,
                    o.lattice_points_d2, o.degree_histogram, o.facet_histogram);
}

Fingerprint fingerprint(const Polytope& p) {
    Fingerprint fp;
    fp.f_vector = p.f_vector();
    fp.degree_histogram = p.vertex_degree_histogram();
    fp.facet_histogram = p.vertex_facet_histogram();
    fp.facet_count = p.facets().size();
    fp.lattice_points_d1 = static_cast<long>(p.lattice_points(1).size());
    fp.lattice_points_d2 = static_cast<long>(p.lattice_points(2).size());
    return fp;
}

namespace {

/* Linear map whose i-th output coordinate is the stated signed input
 * coordinate (1-based). */
UnimodularMap signed_coordinate_map(const std::vector<std::pair<int, int>>& images) {
    UnimodularMap m;
    m.linear = Mat(images.size(), images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const auto [src, sign] = images[i];
        m.linear(i, static_cast<std::size_t>(src - 1)) = Rational(sign);
    }
    return m;
}

}  // namespace

std::vector<WitnessMap> catalog_maps() {
    /* Each entry carries the polytope at node `from` onto the polytope at
     * node `to`; classify() re-verifies every map before relying on it.
     * The twelve-facet class needs one witness beyond the signed
     * permutations: nodes 0 and 8 are related only by a shear-type lattice
     * map, found offline by matching their facet normal matrices. */
    UnimodularMap bridge;
    bridge.linear = Mat::from_rows({{1, 0, 0, 0, 0, 0},
                                    {0, 0, 1, 0, 1, 1},
                                    {0, 1, 0, 1, 1, 0},
                                    {0, 0, 0, 0, 0, -1},
                                    {0, 0, 0, 0, -1, 0},
                                    {0, 0, 0, -1, 0, 0}});
    return {
        {0, 8, bridge},
        {1, 3, signed_coordinate_map({{3, 1}, {2, 1}, {1, 1}, {6, 1}, {5, 1}, {4, 1}})},
        {7, 1, signed_coordinate_map({{1, -1}, {3, -1}, {2, -1}, {6, -1}, {5, -1}, {4, -1}})},
        {9, 2, signed_coordinate_map({{1, -1}, {3, -1}, {2, -1}, {6, -1}, {5, -1}, {4, -1}})},
        {5, 4, signed_coordinate_map({{2, -1}, {3, -1}, {1, -1}, {4, -1}, {5, -1}, {6, -1}})},
        {11, 6, signed_coordinate_map({{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}})},
    };
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Classification classify(const std::vector<Polytope>& polytopes) {
    const std::size_t n = polytopes.size();
    std::vector<Fingerprint> fps;
    for (const Polytope& p : polytopes) fps.push_back(fingerprint(p));

    UnionFind uf(n);
    Classification out;

    for (const WitnessMap& wm : catalog_maps()) {
        if (wm.from < 0 || wm.to < 0 || static_cast<std::size_t>(wm.from) >= n ||
            static_cast<std::size_t>(wm.to) >= n) {
            continue;
        }
        const Polytope& p = polytopes[static_cast<std::size_t>(wm.from)];
        const Polytope& q = polytopes[static_cast<std::size_t>(wm.to)];
        if (p.ambient_dim() != wm.map.linear.cols()) continue;
        if (!verify_unimodular_map(p, q, wm.map)) {
            throw std::logic_error("catalog map failed verification");
        }
        uf.unite(wm.from, wm.to);
        out.witnesses.push_back(wm);
    }

    /* Equal fingerprints are necessary for equivalence; search for the
     * missing witnesses inside each fingerprint group. */
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(fps[i] == fps[j])) continue;
            if (uf.find(static_cast<int>(i)) == uf.find(static_cast<int>(j))) continue;
            const auto found =
                search_signed_permutation_map(polytopes[i], polytopes[j]);
            if (found) {
                uf.unite(static_cast<int>(i), static_cast<int>(j));
                out.witnesses.push_back(
                    WitnessMap{static_cast<int>(i), static_cast<int>(j), *found});
            }
        }
    }
    /* Residual ties: the numeric invariants agree but no map was found.
     * When the face lattices are non-isomorphic the two polytopes really
     * are inequivalent and the separation stands; when they are isomorphic
     * the question is undecided and we refuse to guess. */
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (fps[i] == fps[j] &&
                uf.find(static_cast<int>(i)) != uf.find(static_cast<int>(j)) &&
                combinatorially_isomorphic(polytopes[i], polytopes[j])) {
                throw std::logic_error(
                    "matching invariants but no witness map found; classification incomplete");
            }
        }
    }

    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    }
    out.class_of.assign(n, -1);
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.classes.push_back(members);
    }
    std::sort(out.classes.begin(), out.classes.end());
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
        for (int member : out.classes[c]) {
            out.class_of[static_cast<std::size_t>(member)] = static_cast<int>(c);
        }
    }
    return out;
}

}  // namespace cpoly
