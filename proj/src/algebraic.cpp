#include "olat/algebraic.hpp"

namespace olat {

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    AlgebraicNumber a{UniPoly(), Interval(r)};
    return a;
}

AlgebraicNumber::AlgebraicNumber(UniPoly q, Interval iv)
    : poly_(std::move(q)), iv_(std::move(iv)) {
    if (iv_.lo == iv_.hi) {
        poly_ = UniPoly();
        return;
    }
    if (poly_.is_zero()) throw Error("algebraic number needs a defining polynomial");
    // A rational root exactly at the midpoint collapses to an exact value
    // during refinement; check endpoints are usable now.
    if (poly_.eval(iv_.lo) == 0 || poly_.eval(iv_.hi) == 0)
        throw Error("isolating interval endpoint vanishes");
}

void AlgebraicNumber::refine_once() const {
    if (iv_.lo == iv_.hi) return;
    Rational mid = iv_.mid();
    Rational val = poly_.eval(mid);
    if (val == 0) {
        iv_ = Interval(mid);
        return;
    }
    // Simple root: the sign flips across it.
    if (sign(poly_.eval(iv_.lo)) != sign(val))
        iv_ = Interval(iv_.lo, mid);
    else
        iv_ = Interval(mid, iv_.hi);
}

void AlgebraicNumber::refine() { refine_once(); }

void AlgebraicNumber::refine_below(const Rational& width) {
    while (iv_.width() > width) refine_once();
}

int AlgebraicNumber::compare(const Rational& r) const {
    if (is_exact()) {
        if (exact_value() < r) return -1;
        if (exact_value() > r) return 1;
        return 0;
    }
    while (true) {
        if (r < iv_.lo) return 1;
        if (r > iv_.hi) return -1;
        if (poly_.eval(r) == 0 && iv_.lo < r && r < iv_.hi) return 0;
        refine_once();
        if (is_exact()) return compare(r);
    }
}

int AlgebraicNumber::sign_of(const UniPoly& p) const {
    if (p.is_zero()) return 0;
    if (is_exact()) return sign(p.eval(exact_value()));
    UniPoly g = gcd(p, poly_);
    if (g.degree() >= 1) {
        // p vanishes here iff the common-root polynomial has its root in the
        // isolating interval (every root of g is a root of the defining
        // polynomial, and the interval isolates ours).
        if (g.eval(iv_.lo) == 0 || g.eval(iv_.hi) == 0)
            throw Error("unexpected endpoint root in sign_of");
        if (sturm_count(g, iv_.lo, iv_.hi) > 0) return 0;
    }
    Interval range = p.interval_eval(iv_);
    while (range.contains_zero()) {
        refine_once();
        if (is_exact()) return sign(p.eval(exact_value()));
        range = p.interval_eval(iv_);
    }
    return sign(range.lo);
}

std::string AlgebraicNumber::to_string() const {
    if (is_exact()) return rational_string(exact_value());
    return "alg[" + rational_string(iv_.lo) + "," + rational_string(iv_.hi) + "]";
}

}  // namespace olat
