#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace olat {

// Exact rational scalar. Canonical form (lowest terms, positive denominator)
// is maintained by every operation.
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ArityError : Error {
    using Error::Error;
};
struct UnboundedSetError : Error {
    using Error::Error;
};
struct DimensionGuardError : Error {
    using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num", "num/den" or a plain decimal like "-1.25".
Rational parse_rational(const std::string& text);

// "num/den" when den != 1, otherwise just "num".
std::string rational_string(const Rational& q);

// Deterministic decimal rendering with `digits` places after the point,
// rounded toward zero (debug/report display; exact strings stay normative).
std::string decimal_string(const Rational& q, int digits = 12);

inline int sign(const Rational& q) { return sgn(q); }

Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);
Integer round_nearest_int(const Rational& q);

Rational pow_rational(const Rational& base, unsigned exp);
Rational abs_rational(const Rational& q);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// [lo, hi] with lo <= sqrt(q) <= hi and hi - lo <= 2^-bits; exact when q is
// a perfect square of a rational at that resolution.
struct Enclosure {
    Rational lo;
    Rational hi;
};
Enclosure sqrt_enclosure(const Rational& q, unsigned bits = 64);

// Smallest representable dyadic-step upper bound r with r^e >= q (q >= 0).
Rational root_upper(const Rational& q, unsigned e, unsigned bits = 32);

// Certified enclosure of pi (50 decimal digits).
Enclosure pi_enclosure();

}  // namespace olat
