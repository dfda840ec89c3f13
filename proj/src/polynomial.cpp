#include "olat/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace olat {

unsigned Polynomial::total_degree() const {
    unsigned deg = 0;
    for (const auto& [exps, coeff] : terms_) {
        unsigned d = std::accumulate(exps.begin(), exps.end(), 0u);
        deg = std::max(deg, d);
    }
    return deg;
}

void Polynomial::add_term(const ExponentVec& exps, const Rational& coeff) {
    if (exps.size() != arity_) throw ArityError("term exponent vector length != arity");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (arity_ != o.arity_) throw ArityError("polynomial arity mismatch in +");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (arity_ != o.arity_) throw ArityError("polynomial arity mismatch in -");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rational(-c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (arity_ != o.arity_) throw ArityError("polynomial arity mismatch in *");
    Polynomial r(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExponentVec e(arity_);
            for (unsigned i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
    return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (arity_ != o.arity_) return arity_ < o.arity_;
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return b != o.terms_.end();
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw ArityError("eval point length != arity");
    Rational acc(0);
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff;
        for (unsigned i = 0; i < arity_; ++i)
            if (exps[i] > 0) term *= pow_rational(point[i], exps[i]);
        acc += term;
    }
    return acc;
}

Interval Polynomial::interval_eval(const std::vector<Interval>& box) const {
    if (box.size() != arity_) throw ArityError("box length != arity");
    Interval acc(Rational(0));
    for (const auto& [exps, coeff] : terms_) {
        Interval term(Rational(1));
        for (unsigned i = 0; i < arity_; ++i)
            if (exps[i] > 0) term = term * pow_interval(box[i], exps[i]);
        acc = acc + scale(term, coeff);
    }
    return acc;
}

Polynomial Polynomial::substitute_prefix(const std::vector<Rational>& values) const {
    unsigned m = values.size();
    if (m > arity_) throw ArityError("substitute_prefix: too many values");
    Polynomial r(arity_ - m);
    for (const auto& [exps, coeff] : terms_) {
        Rational c = coeff;
        for (unsigned i = 0; i < m; ++i)
            if (exps[i] > 0) c *= pow_rational(values[i], exps[i]);
        ExponentVec rest(exps.begin() + m, exps.end());
        r.add_term(rest, c);
    }
    return r;
}

Polynomial Polynomial::restrict_to_axis_line(unsigned axis,
                                             const std::vector<Rational>& offsets) const {
    if (axis >= arity_) throw ArityError("axis index out of range");
    if (offsets.size() + 1 != arity_) throw ArityError("offsets length != arity-1");
    Polynomial r(1);
    for (const auto& [exps, coeff] : terms_) {
        Rational c = coeff;
        unsigned off = 0;
        for (unsigned i = 0; i < arity_; ++i) {
            if (i == axis) continue;
            if (exps[i] > 0) c *= pow_rational(offsets[off], exps[i]);
            ++off;
        }
        r.add_term({exps[axis]}, c);
    }
    return r;
}

Polynomial Polynomial::substitute_at(const std::vector<unsigned>& indices,
                                     const std::vector<Rational>& values) const {
    if (indices.size() != values.size()) throw ArityError("indices/values length mismatch");
    std::vector<bool> fixed(arity_, false);
    std::vector<Rational> value_of(arity_, Rational(0));
    for (size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= arity_) throw ArityError("substitute index out of range");
        fixed[indices[k]] = true;
        value_of[indices[k]] = values[k];
    }
    Polynomial r(arity_ - indices.size());
    for (const auto& [exps, coeff] : terms_) {
        Rational c = coeff;
        ExponentVec rest;
        rest.reserve(r.arity());
        for (unsigned i = 0; i < arity_; ++i) {
            if (fixed[i]) {
                if (exps[i] > 0) c *= pow_rational(value_of[i], exps[i]);
            } else {
                rest.push_back(exps[i]);
            }
        }
        r.add_term(rest, c);
    }
    return r;
}

Polynomial Polynomial::linear_substitute(const std::vector<std::vector<Rational>>& map) const {
    if (map.size() != arity_) throw ArityError("linear map rows != arity");
    // Precompute the linear forms as degree-1 polynomials, then expand.
    std::vector<Polynomial> forms;
    forms.reserve(arity_);
    for (unsigned i = 0; i < arity_; ++i) {
        if (map[i].size() != arity_) throw ArityError("linear map not square");
        Polynomial f(arity_);
        for (unsigned j = 0; j < arity_; ++j) {
            ExponentVec e(arity_, 0);
            e[j] = 1;
            f.add_term(e, map[i][j]);
        }
        forms.push_back(std::move(f));
    }
    Polynomial r(arity_);
    for (const auto& [exps, coeff] : terms_) {
        Polynomial term = Polynomial::constant(arity_, coeff);
        for (unsigned i = 0; i < arity_; ++i)
            for (unsigned k = 0; k < exps[i]; ++k) term = term * forms[i];
        r = r + term;
    }
    return r;
}

Polynomial Polynomial::constant(unsigned arity, const Rational& c) {
    Polynomial p(arity);
    p.add_term(ExponentVec(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(unsigned arity, unsigned index, unsigned power) {
    if (index >= arity) throw ArityError("variable index out of range");
    Polynomial p(arity);
    ExponentVec e(arity, 0);
    e[index] = power;
    p.add_term(e, Rational(1));
    return p;
}

}  // namespace olat
