#include "cyclo/polylog.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclo::polylog {

namespace {

bool arg_is_one(const Complex& z) {
    return z.im.is_zero() && mpfr_cmp_ui(z.re.get(), 1) == 0;
}

bool all_args_real(const PolylogWord& w) {
    for (const auto& z : w.args)
        if (!z.im.is_zero()) return false;
    return true;
}

} // namespace

bool is_convergent(const PolylogWord& w) {
    if (w.exps.empty()) return true;
    return !(w.exps.back() == 1 && arg_is_one(w.args.back()));
}

namespace {

// sum_{k > K} k^s r^k <= (K+1)^s r^{K+1} / (1 - r (1+1/(K+1))^s), when the
// denominator is positive
std::optional<Real> geometric_tail(const Real& r, int s, long K, mpfr_prec_t prec) {
    Real t = Real::of(K + 1, prec);
    Real ratio = (t + Real::of(1, prec)) / t; // 1 + 1/(K+1)
    Real denom = Real::of(1, prec) - r * pow_si(ratio, s);
    if (!(denom.sign() > 0)) return std::nullopt;
    Real num = pow_si(t, s) * pow_si(r, K + 1);
    return num / denom;
}

// running state of the nested-sum dynamic programming
struct NestedSum {
    const PolylogWord& w;
    mpfr_prec_t prec;
    bool real_only;
    long k = 0;
    // prefix[j] = sum over chains with k_{j+1} <= k (for the first j+1 letters)
    std::vector<Complex> prefix;
    std::vector<Complex> powers; // x_j^k
    std::vector<Real> rprefix;
    std::vector<Real> rpowers;

    explicit NestedSum(const PolylogWord& word, mpfr_prec_t p)
        : w(word), prec(p), real_only(all_args_real(word)) {
        std::size_t m = word.exps.size();
        if (real_only) {
            rprefix.assign(m, Real(prec));
            rpowers.assign(m, Real(prec));
            for (auto& x : rpowers) mpfr_set_ui(x.get(), 1, MPFR_RNDN);
        } else {
            prefix.assign(m, Complex(prec));
            powers.assign(m, Complex(prec));
            for (auto& x : powers) mpfr_set_ui(x.re.get(), 1, MPFR_RNDN);
        }
    }

    void advance_to(long K) {
        std::size_t m = w.exps.size();
        Real kinv(prec);
        while (k < K) {
            ++k;
            mpfr_set_si(kinv.get(), k, MPFR_RNDN);
            mpfr_ui_div(kinv.get(), 1, kinv.get(), MPFR_RNDN);
            if (real_only) {
                for (std::size_t j = m; j-- > 0;) {
                    rpowers[j] *= w.args[j].re;
                    Real term = rpowers[j];
                    for (int e = 0; e < w.exps[j]; ++e) term *= kinv;
                    if (j > 0) term *= rprefix[j - 1];
                    rprefix[j] += term;
                }
            } else {
                for (std::size_t j = m; j-- > 0;) {
                    powers[j] = powers[j] * w.args[j];
                    Complex term = powers[j];
                    for (int e = 0; e < w.exps[j]; ++e) {
                        term.re *= kinv;
                        term.im *= kinv;
                    }
                    if (j > 0) term = term * prefix[j - 1];
                    prefix[j] += term;
                }
            }
        }
    }

    Complex value() const {
        if (real_only) return Complex(rprefix.back(), Real(prec));
        return prefix.back();
    }
};

} // namespace

EvalResult eval(const PolylogWord& w, const EvalOptions& opt) {
    if (!is_convergent(w)) throw std::runtime_error("eval: divergent polylogarithm word");
    const mpfr_prec_t prec = opt.prec + 64;
    EvalResult out;
    if (w.exps.empty()) {
        out.value = Complex::of(1, opt.prec);
        out.tail_bound = Real(opt.prec);
        out.certified = true;
        return out;
    }
    const int m = w.depth();
    Real r(prec);
    for (const auto& z : w.args) {
        Real az = hp::abs(z);
        if (r < az) r = az;
    }
    Real eps = Real::of(opt.eps_tail, prec);
    NestedSum sum(w, prec);

    if (r < Real::of(1, prec)) {
        // certified geometric tail
        long K = 64;
        std::optional<Real> tail;
        while (true) {
            tail = geometric_tail(r, m - 1, K, prec);
            if (tail && *tail < eps) break;
            K *= 2;
            if (K > opt.max_terms)
                throw std::runtime_error("eval: tolerance unreachable within the term budget");
        }
        sum.advance_to(K);
        out.value = sum.value();
        out.tail_bound = *tail;
        out.certified = true;
        out.terms = K;
        return out;
    }

    // stabilization under doubling of the cutoff
    long K = 1024;
    sum.advance_to(K);
    Complex prev = sum.value();
    while (true) {
        long K2 = K * 2;
        if (K2 > opt.max_terms)
            throw std::runtime_error("eval: tolerance unreachable within the term budget");
        sum.advance_to(K2);
        Complex cur = sum.value();
        Real diff = hp::abs(cur - prev);
        Real est = diff * Real::of(3, prec);
        if (est < eps) {
            out.value = cur;
            out.tail_bound = est;
            out.certified = false;
            out.terms = K2;
            return out;
        }
        prev = cur;
        K = K2;
    }
}

EvalResult eval_iterated(const words::Composition& n, const std::vector<Complex>& a,
                         const EvalOptions& opt) {
    assert(a.size() == n.size() + 1);
    PolylogWord w;
    w.exps = n;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) w.args.push_back(a[i + 1] / a[i]);
    return eval(w, opt);
}

Real stuffle_residual(const PolylogWord& u, const PolylogWord& v, const EvalOptions& opt) {
    Complex lhs = eval(u, opt).value * eval(v, opt).value;
    Complex rhs(opt.prec + 64);
    for (const auto& pat :
         words::quasi_shuffle_patterns(u.depth(), v.depth())) {
        PolylogWord term;
        for (const auto& slot : pat) {
            int e = 0;
            Complex arg = Complex::of(1, opt.prec + 64);
            if (slot.from_left >= 0) {
                e += u.exps[static_cast<std::size_t>(slot.from_left)];
                arg = arg * u.args[static_cast<std::size_t>(slot.from_left)];
            }
            if (slot.from_right >= 0) {
                e += v.exps[static_cast<std::size_t>(slot.from_right)];
                arg = arg * v.args[static_cast<std::size_t>(slot.from_right)];
            }
            term.exps.push_back(e);
            term.args.push_back(arg);
        }
        rhs += eval(term, opt).value;
    }
    return hp::abs(lhs - rhs);
}

Real distribution_residual(const PolylogWord& w, long l, const EvalOptions& opt) {
    const int m = w.depth();
    const int weight = w.weight();
    Complex lhs = eval(w, opt).value;

    // scale l^{w-m}
    Real scale = Real::of(1, opt.prec + 64);
    for (int i = 0; i < weight - m; ++i) scale *= Real::of(l, opt.prec + 64);

    // per-argument root choices
    std::vector<std::vector<Complex>> roots;
    for (const auto& z : w.args) roots.push_back(hp::nth_roots(z, l));

    Complex rhs(opt.prec + 64);
    std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
    while (true) {
        PolylogWord y;
        y.exps = w.exps;
        for (int i = 0; i < m; ++i) y.args.push_back(roots[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
        rhs += eval(y, opt).value;
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < static_cast<std::size_t>(l)) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    rhs.re *= scale;
    rhs.im *= scale;
    return hp::abs(lhs - rhs);
}

Real li_classical(int n, const Real& x) {
    const mpfr_prec_t prec = x.prec();
    Real one = Real::of(1, prec);
    Real ax = hp::abs(x);
    if (n == 1) {
        // -log(1-x)
        Real t = one - x;
        return -hp::log(t);
    }
    if (mpfr_cmp_ui(x.get(), 1) == 0) return Real::zeta(static_cast<unsigned long>(n), prec);

    Real cutoff = Real::of(Rational(99, 100), prec);
    if (ax < cutoff || !(x.sign() > 0)) {
        // direct series with geometric tail
        Real sum(prec), pw = one;
        Real term(prec);
        long k = 0;
        Real eps(prec);
        mpfr_set_ui_2exp(eps.get(), 1, -static_cast<mpfr_exp_t>(prec - 16), MPFR_RNDN);
        while (true) {
            ++k;
            pw *= x;
            term = pw;
            Real kk = Real::of(k, prec);
            for (int e = 0; e < n; ++e) term /= kk;
            sum += term;
            // |tail| <= |x|^{k+1} / (1 - |x|)
            Real tail = pow_si(ax, k + 1) / (one - ax);
            if (tail < eps) break;
        }
        return sum;
    }
    // x close to 1: reflection formulas
    if (n == 2) {
        // Li2(x) = zeta(2) - log(x) log(1-x) - Li2(1-x)
        Real lx = hp::log(x), l1x = hp::log(one - x);
        return Real::zeta(2, prec) - lx * l1x - li_classical(2, one - x);
    }
    if (n == 3) {
        // Li3(x) + Li3(1-x) + Li3(1-1/x) =
        //   zeta(3) + log^3(x)/6 + (pi^2/6) log(x) - log^2(x) log(1-x)/2
        Real lx = hp::log(x), l1x = hp::log(one - x);
        Real pi = Real::pi(prec);
        Real rhs = Real::zeta(3, prec) + pow_si(lx, 3) / Real::of(6, prec) +
                   pi * pi / Real::of(6, prec) * lx - lx * lx * l1x / Real::of(2, prec);
        Real arg = one - one / x; // small negative
        return rhs - li_classical(3, one - x) - li_classical(3, arg);
    }
    throw std::runtime_error("li_classical: reflection only implemented for n <= 3");
}

Real all_ones_deformed(int m, const Rational& eps, mpfr_prec_t prec) {
    // e_m of the variables z^k/k with z = 1-eps, via Newton's identities
    // with power sums p_j = Li_j(z^j)
    Real one = Real::of(1, prec);
    Real z = one - Real::of(eps, prec);
    std::vector<Real> p; // p[j-1] = Li_j(z^j)
    for (int j = 1; j <= m; ++j) p.push_back(li_classical(j, pow_si(z, j)));
    std::vector<Real> e;
    e.push_back(one); // e_0
    for (int k = 1; k <= m; ++k) {
        Real acc(prec);
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            Real term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i - 1)];
            if (sign < 0) term = -term;
            acc += term;
            sign = -sign;
        }
        e.push_back(acc / Real::of(k, prec));
    }
    return e.back();
}

LogPolynomial regularize(const PolylogWord& w, const std::vector<Rational>& eps_grid,
                         const RegularizeOptions& opt) {
    const int m = w.depth();
    // trailing divergent letters: n = 1 at argument 1
    int degree = 0;
    for (int i = m - 1; i >= 0; --i) {
        if (w.exps[static_cast<std::size_t>(i)] == 1 && arg_is_one(w.args[static_cast<std::size_t>(i)]))
            ++degree;
        else
            break;
    }
    if (degree == 0) throw std::runtime_error("regularize: word is already convergent");
    if (static_cast<int>(eps_grid.size()) < degree + 1)
        throw std::runtime_error("regularize: grid smaller than the polynomial degree");

    bool all_ones = true;
    for (int i = 0; i < m; ++i)
        if (w.exps[static_cast<std::size_t>(i)] != 1 || !arg_is_one(w.args[static_cast<std::size_t>(i)]))
            all_ones = false;

    // use the smallest eps values for the fit
    std::vector<Rational> grid = eps_grid;
    std::sort(grid.begin(), grid.end());
    grid.resize(static_cast<std::size_t>(degree + 1));
    // reject near-duplicate abscissae
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] == grid[i - 1]) throw std::runtime_error("regularize: grid points coincide");

    const mpfr_prec_t prec = opt.prec;
    std::vector<Real> ls, vals;
    for (const auto& eps : grid) {
        ls.push_back(hp::log(Real::of(eps, prec)));
        if (all_ones) {
            vals.push_back(all_ones_deformed(m, eps, prec));
        } else {
            PolylogWord d = w;
            Complex z = Complex::of(Rational(1) - eps, prec);
            for (int i = m - degree; i < m; ++i) d.args[static_cast<std::size_t>(i)] = z;
            EvalOptions eo;
            eo.prec = prec;
            eo.eps_tail = opt.eps_tail;
            eo.max_terms = opt.max_terms;
            vals.push_back(eval(d, eo).value.re);
        }
    }

    // Vandermonde solve in L
    const int nsys = degree + 1;
    std::vector<std::vector<Real>> a(static_cast<std::size_t>(nsys));
    for (int r = 0; r < nsys; ++r) {
        for (int c = 0; c < nsys; ++c) a[static_cast<std::size_t>(r)].push_back(pow_si(ls[static_cast<std::size_t>(r)], c));
        a[static_cast<std::size_t>(r)].push_back(vals[static_cast<std::size_t>(r)]);
    }
    for (int col = 0; col < nsys; ++col) {
        // partial pivot
        int piv = col;
        for (int r = col + 1; r < nsys; ++r)
            if (hp::abs(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) <
                hp::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]))
                piv = r;
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
        if (a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].is_zero())
            throw std::runtime_error("regularize: ill-conditioned grid");
        for (int r = 0; r < nsys; ++r) {
            if (r == col) continue;
            Real f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                     a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int c = col; c <= nsys; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    LogPolynomial out;
    for (int c = 0; c < nsys; ++c) {
        Real coeff = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(nsys)] /
                     a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        out.coeffs.push_back(Complex(std::move(coeff), Real(prec)));
    }
    return out;
}

} // namespace cyclo::polylog
