#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dirspace/measure.hpp"
#include "dirspace/polynomial.hpp"

namespace dirspace {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform return type of every norm computation. Exact and quadrature
// results carry std_error 0 and samples 0; Monte Carlo results are a pure
// function of (seed, samples, K) regardless of thread count.
struct NormEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::string method = "exact"; // exact | quadrature | monte-carlo
    std::uint64_t seed = 0;
    bool has_seed = false;

    std::string to_json() const;
};

struct SamplerConfig {
    enum class Domain { Torus, Polydisk };

    std::uint32_t K = 0; // prime coordinates retained
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    Domain domain = Domain::Torus;
};

// Deterministic function of (cfg.seed, stream_index): torus coordinates are
// Haar-uniform on the circle, polydisk coordinates area-uniform on the disk.
Character sample_character(const SamplerConfig& cfg, std::uint64_t stream_index);

// (sum |a_n|^2)^{1/2}, exact.
NormEstimate h2_norm(const DirichletPolynomial& f);

// (sum |a_n|^2 w_n)^{1/2} with Bergman weights of mu.
NormEstimate a2_norm(const DirichletPolynomial& f, const MeasureSpec& mu);

// (sum |a_n|^2 / d(n))^{1/2}, exact.
NormEstimate b2_norm(const DirichletPolynomial& f);

// Exact H^{2m} norm via || f^m ||_{H^2}; refuses products beyond
// coefficient_budget terms rather than truncating.
NormEstimate even_hp_norm(const DirichletPolynomial& f, int p,
                          std::uint64_t coefficient_budget = 10000000);

// Exact A^{2m}_mu and B^{2m} norms by the same power trick.
NormEstimate even_ap_norm(const DirichletPolynomial& f, const MeasureSpec& mu, int p,
                          std::uint64_t coefficient_budget = 10000000);
NormEstimate even_bp_norm(const DirichletPolynomial& f, int p,
                          std::uint64_t coefficient_budget = 10000000);

// Monte Carlo H^p norm: p-th root of the sample mean of |lift(f)|^p over the
// truncated polytorus, delta-method standard error.
NormEstimate mc_hp_norm(const DirichletPolynomial& f, double p, const SamplerConfig& cfg);

// Same samples across all requested exponents (paired estimates).
std::vector<NormEstimate> mc_hp_norms(const DirichletPolynomial& f,
                                      const std::vector<double>& ps,
                                      const SamplerConfig& cfg);

// Monte Carlo B^p norm over the truncated polydisk.
NormEstimate bp_norm_mc(const DirichletPolynomial& f, double p, const SamplerConfig& cfg);
std::vector<NormEstimate> bp_norms_mc(const DirichletPolynomial& f,
                                      const std::vector<double>& ps,
                                      const SamplerConfig& cfg);

// A^p_mu norm: quadrature in sigma of ||f_sigma||_{H^p}^p; exact through
// coefficients when p = 2 or even, Monte Carlo otherwise.
NormEstimate ap_norm(const DirichletPolynomial& f, const MeasureSpec& mu, double p,
                     const SamplerConfig& cfg);

// (|f(+inf)|^p + ||f'||_{A^p_mu}^p)^{1/p}.
NormEstimate dirichlet_space_norm(const DirichletPolynomial& f, const MeasureSpec& mu,
                                  double p, const SamplerConfig& cfg);

// Paired statistic for the contraction ||f||_{A^p_mu} <= ||f||_{H^p}: mean
// and standard error of  int |F(sigma,chi)|^p dmu - |F(0,chi)|^p  over one
// torus sample set (negative mean within error = contraction holds).
struct PairedDiff {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};
PairedDiff ap_vs_hp_power_diff(const DirichletPolynomial& f, const MeasureSpec& mu,
                               double p, const SamplerConfig& cfg);

} // namespace dirspace
