#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dirspace/measure.hpp"
#include "dirspace/norms.hpp"
#include "dirspace/polynomial.hpp"

namespace dirspace {

// One verified identity / asymptotic / inequality. Exact-mode reports carry
// tolerance 0 and integer (decimal string) sides. runtime_ms is shown in the
// human table but kept out of the canonical JSON so identical configs yield
// byte-identical reports.
struct VerificationReport {
    std::string name;
    bool pass = false;
    std::string lhs, rhs;
    double tolerance = 0.0;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::int64_t runtime_ms = 0;

    std::string to_json() const;
    void param(const std::string& key, const std::string& value) {
        parameters.emplace_back(key, value);
    }
    void param(const std::string& key, double value);
};

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_table(const std::vector<VerificationReport>& reports);

// Least squares line with the largest absolute residual.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// ---- exact big-integer identities -------------------------------------

// (sum_{k<=K} C(n+k,n)^2 z^k) (1-z)^{2n+1} has coefficients C(n,k)^2 for
// k <= n and 0 for n < k <= K-(2n+1).
VerificationReport verify_binomial_identity(int n, int K);

// sum_j (-1)^j C(2n+1,j) C(n+m-j,n)^2 = C(n,m)^2.
VerificationReport verify_alternating_sum(int n, int m);

// ---- divisor sums and their asymptotics --------------------------------

// sum_n d_m(n)^2 n^{-a} for a > 1, through the Euler product
// zeta(a)^{m^2} prod_p Q_m(p^{-a}).
double divisor_square_dirichlet_sum(int m, double a, std::uint64_t P_max = 100000);

// gamma_m = prod_p Q_m(1/p).
double gamma_m_constant(int m, std::uint64_t P_max = 20000000);

// sum_n d_m(n)^2 n^{-2 sigma} / (1 + log n) via the Laplace representation
// 1/(1+log n) = int_0^inf e^{-u} n^{-u} du.
double log_damped_divisor_sum(int m, double sigma, std::uint64_t P_max = 100000);

// Direct sieve summation with a decade-ratio tail estimate.
struct DirectSum {
    double value = 0.0;
    double tail_estimate = 0.0;
};
DirectSum divisor_square_sum_direct(int m, double sigma, std::uint32_t N);

VerificationReport divisor_asymptotic(int m, const std::vector<double>& sigma_list,
                                      double ratio_lo = 0.8, double ratio_hi = 1.2);
VerificationReport zeta_power_h2(int m, const std::vector<double>& sigma_list,
                                 double exponent_rel_tol);
VerificationReport injection_blowup(int m, const std::vector<double>& sigma_list,
                                    double exponent_rel_tol = 0.10);

// ---- Littlewood-Paley weight identities --------------------------------

VerificationReport lp_weight_identity(const MeasureSpec& mu,
                                      const std::vector<std::uint64_t>& n_list,
                                      double tol = 1e-8);
VerificationReport lp_b2_identity(const std::vector<std::uint64_t>& n_list,
                                  double tol = 1e-10);

// ---- multiplier constants ----------------------------------------------

// r0 = inf_j (2/(j+2))^{1/j} = 2/3 (exact big-integer certificate),
// sup_j r^{2j} (j+2)^2/4 at r = 2/3 and r = 0.71, the ||1+az||_{B^1}
// quadratic coefficient 1/8, and ||1+arz||^2_{B^2} = 1 + a^2 r^2/2.
VerificationReport multiplier_constants();

// ---- coefficient inequalities and embeddings ---------------------------

// Thm-style coefficient estimates for A^p_mu ('A') and B^p ('B').
VerificationReport coefficient_inequalities(char space, double p, int trials,
                                            const MeasureSpec& mu,
                                            const SamplerConfig& cfg);

// ||f||_{B^4}^4 <= ||f||_{H^2}^4 by exact integer arithmetic on random
// dyadic-coefficient polynomials.
VerificationReport b4_contraction(int trials, std::uint64_t seed,
                                  std::uint32_t max_length = 200);

// ||e_{p_n} - e_{p_m}||_{B^p} >= (2/(p+2))^{1/p}; the single-variable value
// is cross-checked by radial quadrature.
VerificationReport basis_separation(double p,
                                    const std::vector<std::pair<int, int>>& pairs,
                                    const SamplerConfig& cfg);

// Empirical boundedness of the translation T_eps : A^1_mu -> A^2_mu.
VerificationReport t_epsilon_experiment(const MeasureSpec& mu,
                                        const std::vector<double>& eps_list, int trials,
                                        const SamplerConfig& cfg);

// Surrogate for the compactness statement: the H^2 -> A^2 diagonal has
// eigenvalues 1/(1+log n) -> 0; reports the decay.
VerificationReport diagonal_decay_report(std::uint64_t n_max = 1000000);

// d_m == m-fold convolution of ones up to N, and d_m(p^k) == C(m+k-1, m-1).
VerificationReport dm_consistency(int m_max, std::uint32_t N, int k_max);

// ||f||_{A^p_mu} <= ||f||_{H^p} on random polynomials, paired samples.
VerificationReport hp_ap_contraction(const MeasureSpec& mu, double p, int trials,
                                     const SamplerConfig& cfg);

// ||f||_{B^{2p}} <= ||f||_{H^p} on random polynomials.
VerificationReport hp_b2p_embedding(double p, int trials, const SamplerConfig& cfg);

// ||delta_sigma||^2_{A^2_alpha} (2 sigma - 1)^{2+alpha} / Gamma(2+alpha) close
// to 1 near the critical line.
VerificationReport a2_sharpness(double alpha, double sigma, double lo, double hi);

// ---- random polynomial model -------------------------------------------

// Dense length uniform in [n_min, n_max], complex Gaussian coefficients,
// normalized to ||f||_{H^2} = 1 unless normalize = false.
DirichletPolynomial random_polynomial(std::uint64_t seed, std::uint64_t stream,
                                      std::uint32_t n_min, std::uint32_t n_max,
                                      bool normalize = true);

// ---- suites --------------------------------------------------------------

std::vector<std::string> suite_names();
// config_json: optional overrides {"seed":..., "trials":..., ...}; "{}" for
// defaults. Unknown suite -> std::invalid_argument.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const std::string& config_json);

} // namespace dirspace
