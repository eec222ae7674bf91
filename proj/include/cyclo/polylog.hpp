#pragma once

#include "cyclo/hp.hpp"
#include "cyclo/words.hpp"

#include <optional>
#include <vector>

namespace cyclo::polylog {

using hp::Complex;
using hp::Real;

// Li_{n_1..n_m}(x_1..x_m) summed over 0 < k_1 < ... < k_m, |x_i| <= 1.
// Divergent exactly when n_m = 1 and x_m = 1.
struct PolylogWord {
    words::Composition exps;
    std::vector<Complex> args;

    int depth() const { return static_cast<int>(exps.size()); }
    int weight() const { return words::weight(exps); }
};

bool is_convergent(const PolylogWord& w);

struct EvalResult {
    Complex value;
    Real tail_bound;   // certified geometric bound, or the stabilization estimate
    bool certified = false;
    long terms = 0;    // summation cutoff actually used
};

struct EvalOptions {
    mpfr_prec_t prec = 128;
    Rational eps_tail = Rational(1, 1000000000); // 1e-9
    long max_terms = 200000000;
};

// Nested-sum evaluation with running prefix sums (cost K * depth). Geometric
// tail certificate when max |x_i| < 1; doubling stabilization when some
// |x_i| = 1. Throws std::runtime_error on divergent words or when the
// tolerance is unreachable within max_terms.
EvalResult eval(const PolylogWord& w, const EvalOptions& opt = {});

// Iterated-integral values I_{n_1..n_m}(a_1 : ... : a_m : a_{m+1}) through
// the series correspondence x_i = a_{i+1}/a_i.
EvalResult eval_iterated(const words::Composition& n, const std::vector<Complex>& a,
                         const EvalOptions& opt = {});

// |eval(u) eval(v) - sum of quasi-shuffle terms|
Real stuffle_residual(const PolylogWord& u, const PolylogWord& v, const EvalOptions& opt = {});

// |eval(word at z) - l^{w-m} * sum over per-argument l-th roots|
Real distribution_residual(const PolylogWord& w, long l, const EvalOptions& opt = {});

// Classical depth-1 Li_n for real |x| < 1 (n >= 1) or x = 1 (n >= 2);
// reflection formulas take over near 1 for n = 2, 3.
Real li_classical(int n, const Real& x);

// asymptotic polynomial in L = log(eps)
struct LogPolynomial {
    std::vector<Complex> coeffs; // degree 0..d
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct RegularizeOptions {
    mpfr_prec_t prec = 192;
    Rational eps_tail = Rational(1, 10000000000L); // direct-evaluation tail
    long max_terms = 200000000;
};

// Evaluates the (1-eps)-deformed word on the grid and fits the Vandermonde
// system in log(eps) of degree = number of trailing divergent letters,
// using the smallest degree+1 grid points. All-ones words go through the
// symmetric-function route (Newton identities over classical Li), anything
// else through direct summation.
LogPolynomial regularize(const PolylogWord& w, const std::vector<Rational>& eps_grid,
                         const RegularizeOptions& opt = {});

// value of the all-ones depth-m deformed word Li_{1..1}(1-eps,...,1-eps)
Real all_ones_deformed(int m, const Rational& eps, mpfr_prec_t prec);

} // namespace cyclo::polylog
