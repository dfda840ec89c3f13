#include "olat/rational.hpp"

#include <cctype>

namespace olat {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Integer num(text.substr(0, slash));
            Integer den(text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + text + "'");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            size_t frac_len = text.size() - dot - 1;
            Integer num(digits);
            Integer den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        Rational q{Integer(text)};
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer scaled_num = q.get_num() * scale;
    Integer quotient;
    mpz_tdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
    bool negative = quotient < 0;
    Integer mag = negative ? Integer(-quotient) : quotient;
    std::string s = mag.get_str();
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (negative) s.insert(0, "-");
    return s;
}

Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer round_nearest_int(const Rational& q) {
    return floor_int(q + Rational(1, 2));
}

Rational pow_rational(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Enclosure sqrt_enclosure(const Rational& q, unsigned bits) {
    if (q < 0) throw Error("sqrt of negative rational");
    // sqrt(num/den) = sqrt(num*den)/den; take integer sqrt at 2^bits scale.
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Integer target = q.get_num() * q.get_den() * scale * scale;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
    Rational lo(root, q.get_den() * scale);
    lo.canonicalize();
    if (root * root == target) return {lo, lo};
    Rational hi(root + 1, q.get_den() * scale);
    hi.canonicalize();
    return {lo, hi};
}

Rational root_upper(const Rational& q, unsigned e, unsigned bits) {
    if (q < 0) throw Error("even root of negative rational");
    if (e == 0) throw Error("zeroth root");
    if (e == 1) return q;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    // smallest integer t with (t/scale)^e >= q
    Integer scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), e);
    Integer num_scaled = q.get_num() * scale_pow;
    Integer m;
    mpz_cdiv_q(m.get_mpz_t(), num_scaled.get_mpz_t(), q.get_den().get_mpz_t());
    bool m_exact = mpz_divisible_p(num_scaled.get_mpz_t(), q.get_den().get_mpz_t()) != 0;
    Integer t;
    int root_exact = mpz_root(t.get_mpz_t(), m.get_mpz_t(), e);
    if (!(root_exact && m_exact)) t += 1;
    Rational r(t, scale);
    r.canonicalize();
    return r;
}

Enclosure pi_enclosure() {
    static const Enclosure enc = [] {
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, 50);
        Integer num("314159265358979323846264338327950288419716939937510");
        Rational lo(num, den);
        lo.canonicalize();
        Rational hi(num + 1, den);
        hi.canonicalize();
        return Enclosure{lo, hi};
    }();
    return enc;
}

}  // namespace olat
