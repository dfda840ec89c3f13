#pragma once

#include "olat/interval.hpp"
#include "olat/unipoly.hpp"

#include <optional>
#include <string>

namespace olat {

// Real algebraic number carried as (square-free polynomial, isolating
// interval). Exact rationals use a degenerate interval [r, r]. Only
// refinement, rational comparison and sign queries are supported.
class AlgebraicNumber {
  public:
    static AlgebraicNumber from_rational(const Rational& r);
    // `q` square-free with exactly one root in (iv.lo, iv.hi), nonzero at
    // the endpoints.
    AlgebraicNumber(UniPoly q, Interval iv);

    bool is_exact() const { return iv_.lo == iv_.hi; }
    const Rational& exact_value() const { return iv_.lo; }
    const Interval& enclosure() const { return iv_; }
    const UniPoly& defining_poly() const { return poly_; }

    void refine();                     // halves the enclosure width
    void refine_below(const Rational& width);

    // -1, 0, +1 against a rational.
    int compare(const Rational& r) const;

    // Exact sign of p at this number (gcd test for zero, refinement for the
    // rest).
    int sign_of(const UniPoly& p) const;

    // Outer rational bounds (lo <= value <= hi), at current enclosure.
    Rational lower() const { return iv_.lo; }
    Rational upper() const { return iv_.hi; }

    std::string to_string() const;

  private:
    UniPoly poly_;        // empty for exact rationals
    mutable Interval iv_;
    void refine_once() const;
};

}  // namespace olat
