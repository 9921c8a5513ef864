#include "cpoly/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpoly {

TropicalMap tropical_map(const Seed& s, int k) {
    if (!s.is_unfrozen(k)) {
        throw std::invalid_argument("tropical map direction must be unfrozen");
    }
    const std::size_t n = static_cast<std::size_t>(s.n);
    TropicalMap m;
    m.k = k;
    m.t_plus = Mat::identity(n);
    m.t_minus = Mat::identity(n);
    const std::size_t kc = static_cast<std::size_t>(k - 1);
    m.t_plus(kc, kc) = -1;
    m.t_minus(kc, kc) = -1;
    for (int j = 1; j <= s.n; ++j) {
        if (j == k) continue;
        const long e_kj = s.at(k, j);
        const std::size_t jr = static_cast<std::size_t>(j - 1);
        m.t_plus(jr, kc) = Rational(std::max(e_kj, 0L));
        m.t_minus(jr, kc) = Rational(std::max(-e_kj, 0L));
    }
    return m;
}

Vec apply_pwl(const TropicalMap& m, const Vec& x) {
    const Rational& xk = x[static_cast<std::size_t>(m.k - 1)];
    return (xk >= 0 ? m.t_plus : m.t_minus) * x;
}

Polytope apply_tropical(const TropicalMap& m, const Polytope& p) {
    if (p.dim() != static_cast<int>(p.ambient_dim())) {
        throw std::invalid_argument("tropical transport needs a full-dimensional polytope");
    }
    const std::size_t d = p.ambient_dim();
    std::vector<Vec> images;
    for (const int sign : {+1, -1}) {
        std::vector<Halfspace> hs = p.facets();
        Vec e(d, Rational(0));
        e[static_cast<std::size_t>(m.k - 1)] = Rational(sign);
        hs.push_back(Halfspace{std::move(e), Rational(0)});
        try {
            const Polytope piece = Polytope::from_hrep(hs, d);
            const Mat& branch = (sign > 0) ? m.t_plus : m.t_minus;
            for (const Vec& v : piece.vertices()) images.push_back(branch * v);
        } catch (const EmptyPolytopeError&) {
            /* the polytope lies strictly on the other side of the cut */
        }
    }
    return Polytope::from_vrep(images);
}

}  // namespace cpoly
