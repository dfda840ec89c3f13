#pragma once

#include "olat/rational.hpp"

namespace olat {

// Closed interval with exact rational endpoints. Arithmetic is outward by
// construction (no rounding happens at all).
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational point) : lo(point), hi(std::move(point)) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("interval with lo > hi");
    }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return {lo, hi};
}

inline Interval scale(const Interval& a, const Rational& c) {
    if (c >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

// Exact range of x^e over the interval.
inline Interval pow_interval(const Interval& a, unsigned e) {
    if (e == 0) return {Rational(1), Rational(1)};
    if (e % 2 == 1 || a.lo >= 0)
        return {pow_rational(a.lo, e), pow_rational(a.hi, e)};
    if (a.hi <= 0) return {pow_rational(a.hi, e), pow_rational(a.lo, e)};
    Rational l = pow_rational(a.lo, e), h = pow_rational(a.hi, e);
    return {Rational(0), l > h ? l : h};
}

inline Interval hull(const Interval& a, const Interval& b) {
    return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

inline bool overlaps(const Interval& a, const Interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

}  // namespace olat
