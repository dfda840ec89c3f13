#pragma once

#include "olat/interval.hpp"
#include "olat/rational.hpp"

#include <map>
#include <vector>

namespace olat {

using ExponentVec = std::vector<unsigned>;

// Sparse multivariate polynomial with exact rational coefficients.
// No zero coefficients are stored; the zero polynomial has an empty term map.
class Polynomial {
  public:
    explicit Polynomial(unsigned arity = 1) : arity_(arity) {}

    unsigned arity() const { return arity_; }
    const std::map<ExponentVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree of the zero polynomial is 0 by convention (format/degree
    // bookkeeping needs a value there).
    unsigned total_degree() const;

    void add_term(const ExponentVec& exps, const Rational& coeff);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator<(const Polynomial& o) const;  // canonical order for dedup

    Rational eval(const std::vector<Rational>& point) const;
    Interval interval_eval(const std::vector<Interval>& box) const;

    // Substitutes values for the first `count` variables; the remaining
    // variables shift down to indices 0..arity-count-1.
    Polynomial substitute_prefix(const std::vector<Rational>& values) const;

    // Fixes every variable except `axis` to the given offsets (length
    // arity-1, in variable order with `axis` skipped); result has arity 1.
    Polynomial restrict_to_axis_line(unsigned axis,
                                     const std::vector<Rational>& offsets) const;

    // Fixes variables listed in `indices` (sorted) to `values`; remaining
    // variables keep their relative order, arity drops by indices.size().
    Polynomial substitute_at(const std::vector<unsigned>& indices,
                             const std::vector<Rational>& values) const;

    // x_i := sum_j map[i][j] * y_j (square matrix, new arity = old arity).
    Polynomial linear_substitute(const std::vector<std::vector<Rational>>& map) const;

    // Helpers for building small polynomials in code and tests.
    static Polynomial constant(unsigned arity, const Rational& c);
    static Polynomial variable(unsigned arity, unsigned index, unsigned power = 1);

  private:
    unsigned arity_;
    std::map<ExponentVec, Rational> terms_;
};

}  // namespace olat
