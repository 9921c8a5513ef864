#include "cpoly/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace cpoly {

namespace {

/* Scale a rational vector by a positive factor so that its entries are
 * integers with content 1 (the zero vector is returned unchanged). */
Vec primitive_direction(const Vec& v) {
    Integer l(1);
    for (const Rational& x : v) l = lcm(l, x.get_den());
    Vec w = scale(Rational(l), v);
    Integer g(0);
    for (const Rational& x : w) g = gcd(g, x.get_num());
    if (g == 0) return w;
    const Rational f = Rational(1) / Rational(g);
    return scale(f, w);
}

/* Dynamic bitset sized at construction; used for constraint zero-sets and
 * facet-vertex incidence. */
struct Bits {
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(std::size_t n) : w((n + 63) / 64, 0) {}

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const {
        return (w[i >> 6] >> (i & 63)) & 1;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] & ~o.w[i]) return false;
        }
        return true;
    }
    Bits operator&(const Bits& o) const {
        Bits out(*this);
        for (std::size_t i = 0; i < w.size(); ++i) out.w[i] &= o.w[i];
        return out;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }
    bool none() const {
        for (std::uint64_t x : w) {
            if (x) return false;
        }
        return true;
    }
    bool operator==(const Bits&) const = default;
    bool operator<(const Bits& o) const { return w < o.w; }
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t x : b.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::size_t common_count(const Bits& a, const Bits& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        c += std::popcount(a.w[i] & b.w[i]);
    }
    return c;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
}

}  // namespace

Halfspace primitive_halfspace(const Halfspace& h) {
    if (is_zero(h.normal)) {
        throw std::invalid_argument("halfspace with zero normal");
    }
    Integer l(1);
    for (const Rational& x : h.normal) l = lcm(l, x.get_den());
    Vec n = scale(Rational(l), h.normal);
    Integer g(0);
    for (const Rational& x : n) g = gcd(g, x.get_num());
    const Rational f = Rational(l) / Rational(g);
    return Halfspace{scale(Rational(1) / Rational(g), n), h.offset * f};
}

ConeGenerators dd_cone(const std::vector<Vec>& rows, std::size_t dim) {
    struct RayRec {
        Vec v;
        Bits zero;  // processed rows this ray is tight on
    };
    const std::size_t m = rows.size();

    std::vector<Vec> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e(dim, Rational(0));
        e[i] = 1;
        lineality.push_back(e);
    }
    std::vector<RayRec> rays;

    for (std::size_t idx = 0; idx < m; ++idx) {
        const Vec& a = rows[idx];
        if (a.size() != dim) throw std::invalid_argument("dd_cone: row size mismatch");

        /* If some lineality vector leaves the hyperplane a·y = 0, pivot it
         * out: it becomes a ray, the rest of the generators are sheared
         * into the hyperplane. Previously processed rows vanish on the
         * whole lineality space, so their tightness flags stay valid. */
        std::vector<Rational> ldot(lineality.size());
        int piv = -1;
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            ldot[i] = dot(a, lineality[i]);
            if (piv < 0 && ldot[i] != 0) piv = static_cast<int>(i);
        }
        if (piv >= 0) {
            Vec l0 = lineality[piv];
            Rational d0 = ldot[piv];
            if (d0 < 0) {
                l0 = scale(Rational(-1), l0);
                d0 = -d0;
            }
            std::vector<Vec> newlin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (static_cast<int>(i) == piv) continue;
                newlin.push_back(sub(lineality[i], scale(ldot[i] / d0, l0)));
            }
            for (RayRec& r : rays) {
                const Rational dr = dot(a, r.v);
                if (dr != 0) r.v = primitive_direction(sub(r.v, scale(dr / d0, l0)));
                r.zero.set(idx);
            }
            RayRec nr{primitive_direction(l0), Bits(m)};
            for (std::size_t j = 0; j < idx; ++j) nr.zero.set(j);
            rays.push_back(std::move(nr));
            lineality = std::move(newlin);
            continue;
        }

        /* Ordinary double description step on the ray list. */
        std::vector<Rational> d(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            d[i] = dot(a, rays[i].v);
            if (d[i] > 0) {
                pos.push_back(i);
            } else if (d[i] < 0) {
                neg.push_back(i);
            } else {
                rays[i].zero.set(idx);
            }
        }
        if (neg.empty()) continue;

        std::vector<RayRec> created;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                const Bits t = rays[p].zero & rays[n].zero;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == n) continue;
                    if (t.subset_of(rays[r].zero)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Vec v = sub(scale(d[p], rays[n].v), scale(d[n], rays[p].v));
                RayRec nr{primitive_direction(v), t};
                nr.zero.set(idx);
                created.push_back(std::move(nr));
            }
        }
        std::vector<RayRec> kept;
        kept.reserve(rays.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (d[i] >= 0) kept.push_back(std::move(rays[i]));
        }
        for (RayRec& r : created) kept.push_back(std::move(r));
        rays = std::move(kept);
    }

    ConeGenerators out;
    out.lineality = std::move(lineality);
    std::set<Vec> seen;
    for (RayRec& r : rays) {
        if (seen.insert(r.v).second) out.rays.push_back(std::move(r.v));
    }
    return out;
}

namespace {

std::vector<Halfspace> facets_among(const std::vector<Halfspace>& candidates,
                                    const std::vector<Vec>& verts, int dim) {
    std::vector<Halfspace> prim;
    for (const Halfspace& h : candidates) prim.push_back(primitive_halfspace(h));
    std::sort(prim.begin(), prim.end(), halfspace_less);
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

    std::vector<Halfspace> out;
    for (const Halfspace& h : prim) {
        std::vector<Vec> tight;
        for (const Vec& v : verts) {
            if (dot(h.normal, v) == h.offset) tight.push_back(v);
        }
        if (affine_dim(tight) == dim - 1) out.push_back(h);
    }
    return out;
}

}  // namespace

Polytope Polytope::from_hrep(const std::vector<Halfspace>& halfspaces,
                             std::size_t ambient_dim) {
    /* Vertex enumeration on the homogenization
     * { (x0, x) : x0 >= 0, -c x0 + u·x >= 0 for each halfspace }. */
    std::vector<Vec> rows;
    for (const Halfspace& h : halfspaces) {
        if (h.normal.size() != ambient_dim) {
            throw std::invalid_argument("from_hrep: normal dimension mismatch");
        }
        Vec r(ambient_dim + 1);
        r[0] = -h.offset;
        for (std::size_t j = 0; j < ambient_dim; ++j) r[j + 1] = h.normal[j];
        rows.push_back(std::move(r));
    }
    Vec e0(ambient_dim + 1, Rational(0));
    e0[0] = 1;
    rows.push_back(std::move(e0));

    const ConeGenerators cone = dd_cone(rows, ambient_dim + 1);

    std::vector<Vec> verts;
    bool recession = !cone.lineality.empty();
    for (const Vec& ray : cone.rays) {
        if (ray[0] > 0) {
            Vec v(ray.begin() + 1, ray.end());
            verts.push_back(scale(Rational(1) / ray[0], v));
        } else {
            recession = true;
        }
    }
    if (verts.empty()) throw EmptyPolytopeError();
    if (recession) throw UnboundedPolytopeError();

    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    Polytope p;
    p.ambient_dim_ = ambient_dim;
    p.vertices_ = std::move(verts);
    p.dim_ = affine_dim(p.vertices_);
    if (p.dim_ == static_cast<int>(ambient_dim)) {
        p.facets_ = facets_among(halfspaces, p.vertices_, p.dim_);
    }
    return p;
}

Polytope Polytope::from_vrep(const std::vector<Vec>& points) {
    if (points.empty()) throw EmptyPolytopeError();
    const std::size_t d = points[0].size();
    std::vector<Vec> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Vec& p : pts) {
        if (p.size() != d) throw std::invalid_argument("from_vrep: ragged points");
    }
    if (affine_dim(pts) != static_cast<int>(d)) {
        throw std::invalid_argument("from_vrep: points are not full-dimensional");
    }

    /* Facets are the extreme rays of the polar-side cone
     * { (c, u) : c + u·p >= 0 for all input points p }. */
    std::vector<Vec> rows;
    for (const Vec& p : pts) {
        Vec r(d + 1);
        r[0] = 1;
        for (std::size_t j = 0; j < d; ++j) r[j + 1] = p[j];
        rows.push_back(std::move(r));
    }
    const ConeGenerators cone = dd_cone(rows, d + 1);
    if (!cone.lineality.empty()) {
        throw std::logic_error("from_vrep: polar cone not pointed");
    }

    std::vector<Halfspace> facets;
    for (const Vec& ray : cone.rays) {
        Vec u(ray.begin() + 1, ray.end());
        facets.push_back(primitive_halfspace(Halfspace{u, -ray[0]}));
    }
    std::sort(facets.begin(), facets.end(), halfspace_less);

    /* A point is a vertex exactly when its tight facet normals span R^d. */
    std::vector<Vec> verts;
    for (const Vec& p : pts) {
        std::vector<Vec> tight_normals;
        for (const Halfspace& h : facets) {
            if (dot(h.normal, p) == h.offset) tight_normals.push_back(h.normal);
        }
        if (tight_normals.size() >= d &&
            Mat::from_rat_rows(tight_normals).rank() == d) {
            verts.push_back(p);
        }
    }

    Polytope out;
    out.ambient_dim_ = d;
    out.dim_ = static_cast<int>(d);
    out.vertices_ = std::move(verts);
    out.facets_ = std::move(facets);
    return out;
}

bool Polytope::contains(const Vec& p) const {
    if (dim_ != static_cast<int>(ambient_dim_)) {
        throw std::logic_error("contains: facet description unavailable");
    }
    for (const Halfspace& h : facets_) {
        if (dot(h.normal, p) < h.offset) return false;
    }
    return true;
}

namespace {

/* All faces of the polytope as vertex index sets: the closure of the facet
 * sets under intersection, plus the polytope itself and the empty face. */
std::unordered_set<Bits, BitsHash> face_sets(const std::vector<Bits>& facet_bits,
                                             std::size_t nv) {
    std::unordered_set<Bits, BitsHash> faces;
    Bits top(nv);
    for (std::size_t i = 0; i < nv; ++i) top.set(i);
    faces.insert(top);
    faces.insert(Bits(nv));  // empty face
    std::vector<Bits> queue{top};
    while (!queue.empty()) {
        const Bits cur = std::move(queue.back());
        queue.pop_back();
        for (const Bits& f : facet_bits) {
            Bits next = cur & f;
            if (faces.insert(next).second) queue.push_back(next);
        }
    }
    return faces;
}

/* Rank of an integer matrix by fraction-free row elimination. Entries stay
 * exact because each update divides by the previous pivot, which is known to
 * divide the product. Returns -1 if an intermediate value leaves the range
 * where this is safe in 64-bit arithmetic. */
int int_rank_or_fail(std::vector<std::vector<long long>> m) {
    constexpr long long kLimit = 1000000000000000000LL;
    const std::size_t nr = m.size();
    if (nr == 0) return 0;
    const std::size_t nc = m[0].size();
    std::size_t r = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && m[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                const __int128 num = static_cast<__int128>(m[r][c]) * m[i][j] -
                                     static_cast<__int128>(m[i][c]) * m[r][j];
                const __int128 val = num / prev;
                if (val > kLimit || val < -kLimit) return -1;
                m[i][j] = static_cast<long long>(val);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

struct Polytope::FaceData {
    std::vector<std::vector<std::size_t>> incidence;  // per facet, sorted
    std::vector<long> f_vector;
    std::map<int, int> degree_histogram;
};

const Polytope::FaceData& Polytope::face_data() const {
    if (cache_) return *cache_;
    auto data = std::make_shared<FaceData>();
    const std::size_t nv = vertices_.size();
    for (const Halfspace& h : facets_) {
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < nv; ++i) {
            if (dot(h.normal, vertices_[i]) == h.offset) tight.push_back(i);
        }
        data->incidence.push_back(std::move(tight));
    }

    std::vector<Bits> facet_bits;
    for (const auto& inc : data->incidence) {
        Bits b(nv);
        for (std::size_t i : inc) b.set(i);
        facet_bits.push_back(std::move(b));
    }

    /* Faces with integral vertices of modest size admit a fast exact rank
     * computation; anything else goes through rational elimination. */
    bool small_integral = true;
    std::vector<std::vector<long long>> int_verts(nv);
    for (std::size_t i = 0; i < nv && small_integral; ++i) {
        for (const Rational& x : vertices_[i]) {
            if (!is_integer(x) || abs(x.get_num()) > 1000000) {
                small_integral = false;
                break;
            }
            int_verts[i].push_back(x.get_num().get_si());
        }
    }
    const auto face_dim = [&](const std::vector<std::size_t>& idx) {
        if (idx.size() <= 1) return static_cast<int>(idx.size()) - 1;
        if (small_integral) {
            std::vector<std::vector<long long>> diffs;
            for (std::size_t i = 1; i < idx.size(); ++i) {
                std::vector<long long> row(ambient_dim_);
                for (std::size_t j = 0; j < ambient_dim_; ++j) {
                    row[j] = int_verts[idx[i]][j] - int_verts[idx[0]][j];
                }
                diffs.push_back(std::move(row));
            }
            const int r = int_rank_or_fail(std::move(diffs));
            if (r >= 0) return r;
        }
        std::vector<Vec> pts;
        for (std::size_t i : idx) pts.push_back(vertices_[i]);
        return affine_dim(pts);
    };

    data->f_vector.assign(static_cast<std::size_t>(dim_) + 2, 0);
    std::vector<int> degree(nv, 0);
    for (const Bits& face : face_sets(facet_bits, nv)) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < nv; ++i) {
            if (face.test(i)) idx.push_back(i);
        }
        const int d = face_dim(idx);
        data->f_vector[static_cast<std::size_t>(d) + 1] += 1;
        if (d == 1 && idx.size() == 2) {
            degree[idx[0]] += 1;
            degree[idx[1]] += 1;
        }
    }
    for (int deg : degree) data->degree_histogram[deg] += 1;

    cache_ = std::move(data);
    return *cache_;
}

std::vector<std::vector<std::size_t>> Polytope::facet_vertex_incidence() const {
    return face_data().incidence;
}

std::vector<long> Polytope::f_vector() const { return face_data().f_vector; }

std::map<int, int> Polytope::vertex_degree_histogram() const {
    return face_data().degree_histogram;
}

std::map<int, int> Polytope::vertex_facet_histogram() const {
    std::map<int, int> h;
    for (const Vec& v : vertices_) {
        int tight = 0;
        for (const Halfspace& f : facets_) {
            if (dot(f.normal, v) == f.offset) ++tight;
        }
        ++h[tight];
    }
    return h;
}

bool Polytope::is_lattice() const {
    for (const Vec& v : vertices_) {
        for (const Rational& x : v) {
            if (!is_integer(x)) return false;
        }
    }
    return true;
}

std::vector<std::vector<long>> Polytope::lattice_points(long dilation,
                                                        bool interior_only) const {
    if (dim_ != static_cast<int>(ambient_dim_)) {
        throw std::logic_error("lattice_points: polytope not full-dimensional");
    }
    if (!is_lattice()) {
        throw std::logic_error("lattice_points: not a lattice polytope");
    }
    const std::size_t d = ambient_dim_;

    /* A lattice polytope with primitive facet normals has integral
     * offsets, so membership tests run in plain machine integers. */
    std::vector<std::vector<long>> normals;
    std::vector<long> offsets;
    for (const Halfspace& h : facets_) {
        normals.push_back(vec_to_longs(h.normal));
        offsets.push_back(rational_to_long(h.offset) * dilation);
    }

    std::vector<long> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        long mn = rational_to_long(vertices_[0][j]);
        long mx = mn;
        for (const Vec& v : vertices_) {
            const long x = rational_to_long(v[j]);
            mn = std::min(mn, x);
            mx = std::max(mx, x);
        }
        lo[j] = mn * dilation;
        hi[j] = mx * dilation;
        if (dilation < 0) std::swap(lo[j], hi[j]);
    }

    std::vector<std::vector<long>> found;
    std::vector<long> point(d, 0);
    std::vector<long> partial(normals.size(), 0);

    std::function<void(std::size_t)> walk = [&](std::size_t level) {
        if (level == d) {
            for (std::size_t i = 0; i < normals.size(); ++i) {
                if (interior_only ? partial[i] <= offsets[i]
                                  : partial[i] < offsets[i]) {
                    return;
                }
            }
            found.push_back(point);
            return;
        }
        for (long x = lo[level]; x <= hi[level]; ++x) {
            point[level] = x;
            for (std::size_t i = 0; i < normals.size(); ++i) {
                partial[i] += normals[i][level] * x;
            }
            walk(level + 1);
            for (std::size_t i = 0; i < normals.size(); ++i) {
                partial[i] -= normals[i][level] * x;
            }
        }
    };
    walk(0);
    return found;
}

bool Polytope::is_reflexive() const {
    if (dim_ != static_cast<int>(ambient_dim_) || !is_lattice()) return false;
    for (const Halfspace& h : facets_) {
        if (h.offset != -1) return false;
    }
    const auto interior = lattice_points(1, /*interior_only=*/true);
    return interior.size() == 1 &&
           std::all_of(interior[0].begin(), interior[0].end(),
                       [](long x) { return x == 0; });
}

Polytope Polytope::translate(const Vec& t) const {
    Polytope out(*this);
    out.cache_.reset();
    for (Vec& v : out.vertices_) v = add(v, t);
    std::sort(out.vertices_.begin(), out.vertices_.end());
    for (Halfspace& h : out.facets_) h.offset += dot(h.normal, t);
    std::sort(out.facets_.begin(), out.facets_.end(), halfspace_less);
    return out;
}

namespace {

struct IncidenceStructure {
    std::size_t nv, nf;
    std::vector<Bits> vert_facets;  // per vertex: facets through it
    std::vector<Bits> facet_verts;  // per facet: vertices on it

    explicit IncidenceStructure(const Polytope& p) {
        nv = p.vertices().size();
        const auto inc = p.facet_vertex_incidence();
        nf = inc.size();
        vert_facets.assign(nv, Bits(nf));
        facet_verts.assign(nf, Bits(nv));
        for (std::size_t f = 0; f < nf; ++f) {
            for (std::size_t v : inc[f]) {
                vert_facets[v].set(f);
                facet_verts[f].set(v);
            }
        }
    }
};

/* Joint color refinement of the two vertex-facet incidence structures.
 * Returns false if the color histograms separate the polytopes. */
bool refine_colors(const IncidenceStructure& a, const IncidenceStructure& b,
                   std::vector<int>& vca, std::vector<int>& vcb) {
    std::vector<int> fca(a.nf, 0), fcb(b.nf, 0);
    vca.assign(a.nv, 0);
    vcb.assign(b.nv, 0);

    auto color_multiset = [](const Bits& members, const std::vector<int>& colors) {
        std::vector<int> sig;
        for (std::size_t i = 0; i < colors.size(); ++i) {
            if (members.test(i)) sig.push_back(colors[i]);
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };

    for (std::size_t round = 0; round < a.nv + a.nf + 2; ++round) {
        std::map<std::vector<int>, int> codes;
        auto recolor = [&](const IncidenceStructure& s, const std::vector<int>& from,
                           const std::vector<Bits>& memberships,
                           std::vector<int>& own) {
            std::vector<int> next(own.size());
            for (std::size_t i = 0; i < own.size(); ++i) {
                std::vector<int> sig = color_multiset(memberships[i], from);
                sig.push_back(own[i]);
                auto [it, inserted] = codes.emplace(sig, static_cast<int>(codes.size()));
                (void)s;
                (void)inserted;
                next[i] = it->second;
            }
            return next;
        };
        std::vector<int> nfa = recolor(a, vca, a.facet_verts, fca);
        std::vector<int> nfb = recolor(b, vcb, b.facet_verts, fcb);
        codes.clear();
        std::vector<int> nva = recolor(a, nfa, a.vert_facets, vca);
        std::vector<int> nvb = recolor(b, nfb, b.vert_facets, vcb);

        auto hist = [](const std::vector<int>& c) {
            std::map<int, int> h;
            for (int x : c) h[x] += 1;
            return h;
        };
        if (hist(nva) != hist(nvb) || hist(nfa) != hist(nfb)) return false;

        const bool stable = (nva == vca && nfa == fca && nvb == vcb && nfb == fcb);
        vca = std::move(nva);
        vcb = std::move(nvb);
        fca = std::move(nfa);
        fcb = std::move(nfb);
        if (stable) break;
    }
    return true;
}

bool extend_vertex_map(const IncidenceStructure& a, const IncidenceStructure& b,
                       const std::vector<int>& vca, const std::vector<int>& vcb,
                       const std::vector<std::size_t>& order, std::size_t pos,
                       std::vector<int>& map, std::vector<bool>& used) {
    if (pos == order.size()) {
        /* Vertex map complete; facets must correspond set-wise. */
        std::set<Bits> bfacets(b.facet_verts.begin(), b.facet_verts.end());
        for (const Bits& f : a.facet_verts) {
            Bits image(b.nv);
            for (std::size_t v = 0; v < a.nv; ++v) {
                if (f.test(v)) image.set(static_cast<std::size_t>(map[v]));
            }
            if (!bfacets.erase(image)) return false;
        }
        return bfacets.empty();
    }
    const std::size_t v = order[pos];
    for (std::size_t w = 0; w < b.nv; ++w) {
        if (used[w] || vcb[w] != vca[v]) continue;
        bool ok = true;
        for (std::size_t q = 0; q < pos; ++q) {
            const std::size_t u = order[q];
            if (common_count(a.vert_facets[v], a.vert_facets[u]) !=
                common_count(b.vert_facets[w],
                             b.vert_facets[static_cast<std::size_t>(map[u])])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[v] = static_cast<int>(w);
        used[w] = true;
        if (extend_vertex_map(a, b, vca, vcb, order, pos + 1, map, used)) return true;
        used[w] = false;
        map[v] = -1;
    }
    return false;
}

}  // namespace

bool combinatorially_isomorphic(const Polytope& p, const Polytope& q) {
    if (p.vertices().size() != q.vertices().size() ||
        p.facets().size() != q.facets().size() || p.dim() != q.dim()) {
        return false;
    }
    if (p.f_vector() != q.f_vector() ||
        p.vertex_degree_histogram() != q.vertex_degree_histogram()) {
        return false;
    }
    const IncidenceStructure a(p), b(q);
    std::vector<int> vca, vcb;
    if (!refine_colors(a, b, vca, vcb)) return false;

    /* Assign rare colors first to cut the search. */
    std::map<int, int> class_size;
    for (int c : vca) class_size[c] += 1;
    std::vector<std::size_t> order(a.nv);
    for (std::size_t i = 0; i < a.nv; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (class_size[vca[x]] != class_size[vca[y]]) {
            return class_size[vca[x]] < class_size[vca[y]];
        }
        return x < y;
    });

    std::vector<int> map(a.nv, -1);
    std::vector<bool> used(b.nv, false);
    return extend_vertex_map(a, b, vca, vcb, order, 0, map, used);
}

}  // namespace cpoly
