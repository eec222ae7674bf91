#include "cyclo/hp.hpp"

#include <vector>

namespace cyclo::hp {

std::string Real::str(int digits) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v_);
    return buf;
}

Real abs(const Real& a) {
    Real r(a);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDN);
    return r;
}

Real rootn(const Real& a, unsigned long n) {
    Real r(a.prec());
    mpfr_rootn_ui(r.get(), a.get(), n, MPFR_RNDN);
    return r;
}

Complex Complex::root_of_unity(long k, long n, mpfr_prec_t prec) {
    Real angle = Real::pi(prec);
    mpfr_mul_si(angle.get(), angle.get(), 2 * k, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
    Complex z(prec);
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
    return z;
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

std::string to_string(const Complex& z, int digits) {
    if (z.is_real()) return z.re.str(digits);
    std::string s = z.re.str(digits);
    std::string t = z.im.str(digits);
    if (!t.empty() && t[0] == '-') return s + " - " + t.substr(1) + "i";
    return s + " + " + t + "i";
}

std::vector<Complex> nth_roots(const Complex& z, long n) {
    mpfr_prec_t prec = z.prec();
    Real r = abs(z);
    Real theta(prec);
    mpfr_atan2(theta.get(), z.im.get(), z.re.get(), MPFR_RNDN);
    Real rr = rootn(r, static_cast<unsigned long>(n));
    std::vector<Complex> out;
    Real two_pi = Real::pi(prec);
    mpfr_mul_si(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
    for (long k = 0; k < n; ++k) {
        Real ang = theta;
        mpfr_div_si(ang.get(), ang.get(), n, MPFR_RNDN);
        Real shift = two_pi;
        mpfr_mul_si(shift.get(), shift.get(), k, MPFR_RNDN);
        mpfr_div_si(shift.get(), shift.get(), n, MPFR_RNDN);
        ang += shift;
        Complex w(prec);
        mpfr_sin_cos(w.im.get(), w.re.get(), ang.get(), MPFR_RNDN);
        w.re *= rr;
        w.im *= rr;
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace cyclo::hp
