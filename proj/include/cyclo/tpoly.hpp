#pragma once

#include "cyclo/rational.hpp"

#include <map>
#include <vector>

namespace cyclo::words {

// Exponent vector over the generating variables t_0,...,t_{nvars-1}.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Polynomial in t_0..t_{nvars-1} with rational coefficients. Term maps are
// kept small: the ambient degree is bounded by w-m everywhere we use this.
class TPolynomial {
public:
    TPolynomial() = default;
    explicit TPolynomial(std::size_t nvars) : nvars_(nvars) {}

    static TPolynomial constant(std::size_t nvars, const Rational& c);
    static TPolynomial variable(std::size_t nvars, std::size_t i);
    // c0 + sum_i coeffs[i] * t_i
    static TPolynomial linear(std::size_t nvars, const std::vector<Rational>& coeffs,
                              const Rational& c0 = Rational(0));

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& mono, const Rational& c);
    Rational coefficient(const Monomial& mono) const;

    TPolynomial& operator+=(const TPolynomial& rhs);
    TPolynomial& operator-=(const TPolynomial& rhs);
    TPolynomial& operator*=(const Rational& c);
    friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
    friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
    friend TPolynomial operator*(const Rational& c, TPolynomial p) { return p *= c; }

    // Product truncated to total degree <= degree_cap (cap < 0 means none).
    TPolynomial mul(const TPolynomial& rhs, int degree_cap = -1) const;
    TPolynomial pow(unsigned e, int degree_cap = -1) const;

    // Substitutes t_i -> forms[i]; forms are polynomials in a possibly
    // different variable set, all with equal nvars.
    TPolynomial substitute(const std::vector<TPolynomial>& forms, int degree_cap = -1) const;

    bool operator==(const TPolynomial& rhs) const { return terms_ == rhs.terms_; }

private:
    std::size_t nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

} // namespace cyclo::words
