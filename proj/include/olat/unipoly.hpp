#pragma once

#include "olat/interval.hpp"
#include "olat/polynomial.hpp"
#include "olat/rational.hpp"

#include <vector>

namespace olat {

// Dense univariate polynomial; coefficients[i] multiplies t^i and the
// leading coefficient is nonzero (zero polynomial = empty vector).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly from_sparse(const Polynomial& p);  // requires arity 1

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return (int)coeffs_.size() - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational eval(const Rational& x) const;
    Interval interval_eval(const Interval& iv) const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    // Exact euclidean division: *this = q*d + r with deg r < deg d.
    struct DivRem {
        UniPoly quot;
        UniPoly rem;
    };
    DivRem divrem(const UniPoly& d) const;

    // Scales so that coefficients are coprime integers; the sign of the
    // leading coefficient is preserved (scaling factor is positive).
    UniPoly primitive() const;

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // primitive, positive leading
UniPoly square_free_part(const UniPoly& p);

// Signed remainder sequence starting (p, p'); contents are stripped with
// positive factors only so signs are those of the classical chain.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x);

// Number of distinct real roots of p in the open interval (lo, hi).
// Requires p(lo) != 0 and p(hi) != 0 (the classical chain counts distinct
// roots even when p is not square-free).
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

// 1 + max |c_i| / |c_d|: every real root lies strictly inside (-B, B).
Rational cauchy_root_bound(const UniPoly& p);

// Ordered isolating intervals: pairwise disjoint with a strict rational gap
// between consecutive ones, each containing exactly one root of the
// square-free part, endpoints non-vanishing.
struct IsolatedRoots {
    UniPoly square_free;
    std::vector<Interval> intervals;
};
IsolatedRoots isolate_real_roots(const UniPoly& p);

}  // namespace olat
