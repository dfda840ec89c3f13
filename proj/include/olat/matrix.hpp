#pragma once

#include "olat/rational.hpp"

#include <vector>

namespace olat {

using Vec = std::vector<Rational>;

// Dense rational matrix, row major.
struct Mat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rational> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

    Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Mat identity(size_t n);
    Mat transpose() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_vec(const Mat& m, const Vec& v);  // column-vector convention
Rational det(const Mat& m);
Mat inverse(const Mat& m);  // throws on singular input

Rational dot(const Vec& x, const Vec& y);
Rational norm_sq(const Vec& x);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Vec& x, const Rational& c);

// Rank of the span of the given vectors (exact Gaussian elimination).
size_t rank_of(const std::vector<Vec>& vectors);

using IntMat = std::vector<std::vector<Integer>>;

// Column-style Hermite form of a nonsingular integer matrix:
// U * K = H with H lower triangular (positive diagonal) and K unimodular.
struct Hnf {
    IntMat h;
    IntMat k;
};
Hnf hermite_lower(const IntMat& u);

IntMat int_identity(size_t n);
IntMat int_mul(const IntMat& x, const IntMat& y);
Integer int_det(const IntMat& m);
Mat to_rational(const IntMat& m);

// Exact LLL reduction (delta = 3/4) of the rows of `basis`; returns the
// reduced rows together with the unimodular transform rows_out = T * rows_in.
struct LllResult {
    Mat reduced;
    IntMat transform;
};
LllResult lll_reduce(const Mat& basis);

// All nonzero integer coefficient vectors `a` (up to sign, first nonzero
// entry positive) with |a^T * basis|^2 <= bound, with exact norms.
struct ShortVector {
    std::vector<Integer> coeffs;
    Vec vector;
    Rational norm_sq;
};
std::vector<ShortVector> enumerate_short_vectors(const Mat& basis, const Rational& bound);

}  // namespace olat
