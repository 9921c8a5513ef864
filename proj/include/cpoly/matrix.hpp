#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cpoly/rational.hpp"

namespace cpoly {

using Vec = std::vector<Rational>;

Vec vec_from_longs(const std::vector<long>& v);
std::vector<long> vec_to_longs(const Vec& v);  // throws if non-integral
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);

/* Dense rational matrix, row-major. */
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<std::vector<long>>& rows);
    static Mat from_rat_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Mat operator*(const Mat& rhs) const;
    Vec operator*(const Vec& x) const;
    Mat transpose() const;
    bool operator==(const Mat& rhs) const = default;

    bool is_integral() const;
    bool is_square() const { return rows_ == cols_; }

    /* Exact Gaussian elimination; rationals make pivot choice a non-issue. */
    Rational det() const;               // throws std::domain_error if not square
    Mat inverse() const;                // throws std::domain_error if singular
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/*
 * Affine dimension of a point set: -1 for the empty set, 0 for a single
 * point, d when the points affinely span a d-dimensional flat.
 */
int affine_dim(const std::vector<Vec>& points);

/* x |-> linear * x + shift. */
struct AffineMap {
    Mat linear;
    Vec shift;

    Vec apply(const Vec& x) const;
    AffineMap after(const AffineMap& inner) const;  // this ∘ inner
    AffineMap inverse() const;
};

}  // namespace cpoly
