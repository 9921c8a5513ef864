#include "cpoly/matrix.hpp"

#include <cstddef>
#include <stdexcept>

namespace cpoly {

Vec vec_from_longs(const std::vector<long>& v) {
    Vec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<long> vec_to_longs(const Vec& v) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(rational_to_long(x));
    return out;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const Rational& c, const Vec& v) {
    Vec out(v);
    for (Rational& x : out) x *= c;
    return out;
}

bool is_zero(const Vec& v) {
    for (const Rational& x : v) {
        if (x != 0) return false;
    }
    return true;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw std::invalid_argument("from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_rat_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw std::invalid_argument("from_rat_rows: ragged rows");
        }
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

Vec Mat::col(std::size_t j) const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("mat mul: shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

Vec Mat::operator*(const Vec& x) const {
    if (cols_ != x.size()) throw std::invalid_argument("mat*vec: shape mismatch");
    Vec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
    }
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

bool Mat::is_integral() const {
    for (const Rational& x : a_) {
        if (!is_integer(x)) return false;
    }
    return true;
}

Rational Mat::det() const {
    if (!is_square()) throw std::domain_error("det: matrix not square");
    Mat m(*this);
    Rational result(1);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = c;
        while (pivot < rows_ && m(pivot, c) == 0) ++pivot;
        if (pivot == rows_) return Rational(0);
        if (pivot != c) {
            for (std::size_t j = c; j < cols_; ++j) std::swap(m(pivot, j), m(c, j));
            result = -result;
        }
        result *= m(c, c);
        const Rational inv = Rational(1) / m(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return result;
}

Mat Mat::inverse() const {
    if (!is_square()) throw std::domain_error("inverse: matrix not square");
    const std::size_t n = rows_;
    Mat m(*this);
    Mat inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: singular matrix");
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        }
        const Rational f = Rational(1) / m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= f;
            inv(c, j) *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            const Rational g = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= g * m(c, j);
                inv(i, j) -= g * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t Mat::rank() const {
    Mat m(*this);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r) {
            for (std::size_t j = c; j < cols_; ++j) std::swap(m(pivot, j), m(r, j));
        }
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

int affine_dim(const std::vector<Vec>& points) {
    if (points.empty()) return -1;
    std::vector<Vec> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(sub(points[i], points[0]));
    }
    if (diffs.empty()) return 0;
    return static_cast<int>(Mat::from_rat_rows(diffs).rank());
}

Vec AffineMap::apply(const Vec& x) const { return add(linear * x, shift); }

AffineMap AffineMap::after(const AffineMap& inner) const {
    return AffineMap{linear * inner.linear, add(linear * inner.shift, shift)};
}

AffineMap AffineMap::inverse() const {
    Mat inv = linear.inverse();
    return AffineMap{inv, scale(Rational(-1), inv * shift)};
}

}  // namespace cpoly
