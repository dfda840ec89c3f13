#include "olat/unipoly.hpp"

#include <algorithm>

namespace olat {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_sparse(const Polynomial& p) {
    if (p.arity() != 1) throw ArityError("from_sparse requires arity 1");
    std::vector<Rational> c;
    for (const auto& [exps, coeff] : p.terms()) {
        if (exps[0] >= c.size()) c.resize(exps[0] + 1, Rational(0));
        c[exps[0]] = coeff;
    }
    return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval UniPoly::interval_eval(const Interval& iv) const {
    Interval acc{Rational(0)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * iv + Interval(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational((long)i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return UniPoly(std::move(c));
}

UniPoly::DivRem UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot;
    int dd = d.degree();
    if ((int)rem.size() - 1 >= dd) quot.assign(rem.size() - dd, Rational(0));
    for (int k = (int)rem.size() - 1; k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / d.leading();
        quot[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.coeffs()[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return UniPoly();
    Integer den_lcm(1);
    for (const auto& c : coeffs_)
        if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer num_gcd(0);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);  // positive
    factor.canonicalize();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) {
        x *= factor;
        x.canonicalize();
    }
    return UniPoly(std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).rem.primitive();
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    if (x.leading() < 0) x = -x;
    return x;
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) throw Error("square-free part of zero polynomial");
    if (p.degree() == 0) return UniPoly({Rational(1)});
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    return p.divrem(g).quot.primitive();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p.primitive());
    UniPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive());
    while (true) {
        const UniPoly& s0 = chain[chain.size() - 2];
        const UniPoly& s1 = chain[chain.size() - 1];
        UniPoly r = s0.divrem(s1).rem;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = sign(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++variations;
        prev = sg;
    }
    return variations;
}

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw Error("sturm_count of zero polynomial");
    if (lo >= hi) return 0;
    if (p.eval(lo) == 0 || p.eval(hi) == 0)
        throw Error("sturm_count: polynomial vanishes at an endpoint");
    auto chain = sturm_chain(p);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero()) throw Error("root bound of zero polynomial");
    Rational max_ratio(0);
    const Rational lead = abs_rational(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs_rational(p.coeffs()[i]) / lead;
        if (r > max_ratio) max_ratio = r;
    }
    return max_ratio + 1;
}

namespace {

// Splitting point in (lo, hi) where q does not vanish; tries the midpoint
// then nearby dyadic offsets (roots are finite, so this terminates).
Rational nonroot_split(const UniPoly& q, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (q.eval(mid) != 0) return mid;
    Rational step = (hi - lo) / 4;
    while (true) {
        Rational left = mid - step, right = mid + step;
        if (left > lo && q.eval(left) != 0) return left;
        if (right < hi && q.eval(right) != 0) return right;
        step /= 2;
    }
}

void bisect(const UniPoly& q, const std::vector<UniPoly>& chain, const Rational& lo,
            const Rational& hi, int var_lo, int var_hi, std::vector<Interval>& out) {
    int count = var_lo - var_hi;
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = nonroot_split(q, lo, hi);
    int var_mid = sign_variations(chain, mid);
    bisect(q, chain, lo, mid, var_lo, var_mid, out);
    bisect(q, chain, mid, hi, var_mid, var_hi, out);
}

}  // namespace

IsolatedRoots isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("root isolation of zero polynomial");
    IsolatedRoots result;
    result.square_free = square_free_part(p);
    const UniPoly& q = result.square_free;
    if (q.degree() <= 0) return result;
    Rational bound = cauchy_root_bound(q);
    auto chain = sturm_chain(q);
    bisect(q, chain, -bound, bound, sign_variations(chain, -bound),
           sign_variations(chain, bound), result.intervals);
    // Consecutive intervals may share an endpoint; shrink until a strict gap
    // separates them so callers can pick rational sample points in between.
    for (size_t i = 0; i + 1 < result.intervals.size(); ++i) {
        while (result.intervals[i].hi >= result.intervals[i + 1].lo) {
            for (Interval* iv : {&result.intervals[i], &result.intervals[i + 1]}) {
                Rational mid = nonroot_split(q, iv->lo, iv->hi);
                if (sturm_count(q, iv->lo, mid) == 1)
                    iv->hi = mid;
                else
                    iv->lo = mid;
            }
        }
    }
    return result;
}

}  // namespace olat
