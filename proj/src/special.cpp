#include "dirspace/special.hpp"

#include <cmath>
#include <cstdint>

namespace dirspace {

namespace {

// Series for P(a,x), valid and fast for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NumericalError("gamma_p: series did not converge");
}

// Modified Lentz continued fraction for Q(a,x), x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
    throw NumericalError("gamma_q: continued fraction did not converge");
}

} // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double upper_incomplete_gamma(double a, double x) {
    return gamma_q(a, x) * std::exp(std::lgamma(a));
}

double zeta_like_sum(double eps, double beta, std::uint64_t n_first, double tol) {
    if (!(eps > 0.0)) throw std::domain_error("zeta_like_sum: eps > 0 required");
    if (beta < 0.0) throw std::domain_error("zeta_like_sum: beta >= 0 required");
    if (n_first >= 2 && eps > 800.0) return 0.0; // 2^{-(1+eps)} underflows
    const double s = 1.0 + eps;

    // n^{-(1+eps)} = exp(-log n) * exp(-eps log n): exact in eps
    auto g = [&](double x) {
        const double lx = std::log(x);
        return std::pow(1.0 + lx, beta) * std::exp(-lx) * std::exp(-eps * lx);
    };

    std::uint64_t N = 64;
    double partial = 0.0;
    std::uint64_t summed_to = n_first - 1; // sum over [n_first, summed_to]
    for (;;) {
        for (std::uint64_t n = summed_to + 1; n < N; ++n) partial += g((double)n);
        summed_to = N - 1;

        const double L = 1.0 + std::log((double)N);
        const double gN = g((double)N);
        // integral_N^inf g = e^eps eps^{-(beta+1)} Gamma(beta+1, eps*L)
        const double integral =
            std::exp(eps) * std::pow(eps, -(beta + 1.0)) * upper_incomplete_gamma(beta + 1.0, eps * L);
        const double u = (beta / L - s) / (double)N;
        const double up = (-beta / (L * L) - beta / L + s) / ((double)N * (double)N);
        const double gp = gN * u;
        const double gpp = gN * (u * u + up);
        // Next Euler-Maclaurin term involves g''' ~ g * O((s+beta)/N)^3; use
        // |g''|*(s+beta+3)/N as a conservative remainder scale.
        const double remainder = std::fabs(gpp) * (s + beta + 3.0) / (double)N / 720.0 * 8.0;

        const double value = partial + integral + gN / 2.0 - gp / 12.0;
        if (remainder <= tol * std::fabs(value) || N >= (1ull << 22))
            return value;
        N *= 4;
    }
}

double log_weight_zeta_sum(double s, double beta, double tol) {
    if (!(s > 1.0)) throw std::domain_error("log_weight_zeta_sum: s > 1 required");
    return zeta_like_sum(s - 1.0, beta, 1, tol);
}

double riemann_zeta(double s) { return log_weight_zeta_sum(s, 0.0); }

double riemann_zeta_one_plus(double eps) { return zeta_like_sum(eps, 0.0, 1); }

double riemann_zeta_minus_one(double s) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta_minus_one: s > 1 required");
    return zeta_like_sum(s - 1.0, 0.0, 2);
}

double zeta_minus_zeta_prime(double s) { return log_weight_zeta_sum(s, 1.0); }

} // namespace dirspace
