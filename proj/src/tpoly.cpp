#include "cyclo/tpoly.hpp"

#include <cassert>

namespace cyclo::words {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

TPolynomial TPolynomial::constant(std::size_t nvars, const Rational& c) {
    TPolynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

TPolynomial TPolynomial::variable(std::size_t nvars, std::size_t i) {
    assert(i < nvars);
    TPolynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, Rational(1));
    return p;
}

TPolynomial TPolynomial::linear(std::size_t nvars, const std::vector<Rational>& coeffs,
                                const Rational& c0) {
    assert(coeffs.size() == nvars);
    TPolynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c0);
    for (std::size_t i = 0; i < nvars; ++i) {
        Monomial m(nvars, 0);
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

void TPolynomial::add_term(const Monomial& mono, const Rational& c) {
    if (cyclo::is_zero(c)) return;
    assert(mono.size() == nvars_);
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (cyclo::is_zero(it->second)) terms_.erase(it);
    }
}

Rational TPolynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& rhs) {
    assert(nvars_ == rhs.nvars_ || terms_.empty() || rhs.terms_.empty());
    if (terms_.empty()) nvars_ = rhs.nvars_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& rhs) {
    assert(nvars_ == rhs.nvars_ || terms_.empty() || rhs.terms_.empty());
    if (terms_.empty()) nvars_ = rhs.nvars_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

TPolynomial& TPolynomial::operator*=(const Rational& c) {
    if (cyclo::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TPolynomial TPolynomial::mul(const TPolynomial& rhs, int degree_cap) const {
    assert(nvars_ == rhs.nvars_);
    TPolynomial out(nvars_);
    for (const auto& [ma, ca] : terms_) {
        int da = total_degree(ma);
        for (const auto& [mb, cb] : rhs.terms_) {
            if (degree_cap >= 0 && da + total_degree(mb) > degree_cap) continue;
            Monomial m(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

TPolynomial TPolynomial::pow(unsigned e, int degree_cap) const {
    TPolynomial out = constant(nvars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) {
        out = out.mul(*this, degree_cap);
        if (out.is_zero()) break;
    }
    return out;
}

TPolynomial TPolynomial::substitute(const std::vector<TPolynomial>& forms, int degree_cap) const {
    assert(forms.size() == nvars_);
    std::size_t out_vars = forms.empty() ? 0 : forms[0].nvars();
    TPolynomial out(out_vars);
    for (const auto& [m, c] : terms_) {
        TPolynomial term = TPolynomial::constant(out_vars, c);
        for (std::size_t i = 0; i < nvars_ && !term.is_zero(); ++i)
            if (m[i] > 0) term = term.mul(forms[i].pow(static_cast<unsigned>(m[i]), degree_cap), degree_cap);
        out += term;
    }
    return out;
}

} // namespace cyclo::words
