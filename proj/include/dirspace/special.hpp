#pragma once

#include <cstdint>
#include <stdexcept>

namespace dirspace {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Regularized incomplete gamma functions, a > 0, x >= 0.
double gamma_p(double a, double x); // P(a,x) = gamma(a,x)/Gamma(a)
double gamma_q(double a, double x); // Q(a,x) = Gamma(a,x)/Gamma(a)

// Unregularized upper incomplete Gamma(a, x).
double upper_incomplete_gamma(double a, double x);

// sum_{n >= n_first} (1+log n)^beta n^{-(1+eps)} for eps > 0, beta >= 0.
// Direct summation plus an Euler-Maclaurin tail (integral via incomplete
// gamma, first two correction terms); the remainder is driven below
// tol * |S| by raising the split point. eps is authoritative, so callers
// close to the pole keep full relative accuracy.
double zeta_like_sum(double eps, double beta, std::uint64_t n_first = 1,
                     double tol = 1e-13);

// S(s, beta) = sum_{n>=1} (1+log n)^beta n^{-s} for s > 1.
double log_weight_zeta_sum(double s, double beta, double tol = 1e-13);

// zeta(s) for s > 1, |error| <= ~1e-13 relative.
double riemann_zeta(double s);

// zeta(1 + eps), eps authoritative (no cancellation near the pole).
double riemann_zeta_one_plus(double eps);

// zeta(s) - 1 = sum_{n>=2} n^{-s}, summed from n = 2 so large s keeps full
// relative accuracy.
double riemann_zeta_minus_one(double s);

// (zeta - zeta')(s) = sum (1+log n) n^{-s}.
double zeta_minus_zeta_prime(double s);

} // namespace dirspace
