#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dirspace/measure.hpp"
#include "dirspace/norms.hpp"

namespace dirspace {

enum class EvalKind { Exact, UpperBound, LowerBound };

const char* eval_kind_name(EvalKind k);

// Norm (or bound on the norm) of the point evaluation f -> f(s) on one of
// the spaces, at a point with Re(s) > 1/2 (or z in the disk).
struct EvalBound {
    double value = 0.0;
    EvalKind kind = EvalKind::Exact;
    std::string space; // hp | a2 | ap | ap0 | bp | dp | disk
    std::complex<double> s;
    double p = 2.0;
    std::string measure; // empty when not applicable
    double std_error = 0.0; // Monte Carlo backed lower bounds only

    std::string to_json() const;
};

// ||delta_s|| on H^p: zeta(2 Re s)^{1/p}.
EvalBound eval_norm_hp(std::complex<double> s, double p);

// ||delta_s|| on B^p: zeta(2 Re s)^{2/p}.
EvalBound eval_norm_bp(std::complex<double> s, double p);

struct KernelValue {
    std::complex<double> value;
    double tail_bound = 0.0;
};

// Truncated reproducing kernel sum_{n<=N} n^{-w-conj(s)} / w_n with a tail
// bound from the slow-decay witness w_n > c n^{-eps}.
KernelValue kernel_a2(const MeasureSpec& mu, std::complex<double> s,
                      std::complex<double> w, std::uint64_t N);

// ||delta_s|| on A^2_mu = K(s,s)^{1/2}; summed to ~1e-12 for mu_alpha and the
// Dirac mass, truncated with reported tail (std_error field) for densities.
EvalBound eval_norm_a2(const MeasureSpec& mu, std::complex<double> s);

// Even p: ||delta_s|| <= ||delta_s||_{A^2}^{2/p}.
EvalBound eval_bound_ap_even(const MeasureSpec& mu, std::complex<double> s, int p);

std::vector<double> default_eta_grid(double sigma_minus_half, int count = 32);

// General upper bound: inf over eta of
//   || Delta_p(Re s - .) ||_{L^{p'}([0, Re s - 1/2 - eta], dmu)} / mu([0, Re s - 1/2 - eta]).
// The zero-constant variant replaces Delta_p by the sharper majorants
// available on the subspace a_1 = 0.
EvalBound eval_bound_ap_general(const MeasureSpec& mu, std::complex<double> s, double p,
                                const std::vector<double>& eta_grid,
                                bool zero_constant = false);

// Lower bound via the test-function quotient |F(sigma)| / ||F||_{A^p_mu},
// F a partial sum of (zeta_sigma)^{2/p}. Exact norm for p in {2, even},
// Monte Carlo otherwise (then conservatively shifted by 2 std errors).
EvalBound eval_lower_ap(const MeasureSpec& mu, double sigma, double p, std::uint32_t N,
                        const SamplerConfig& cfg);

// D^p_mu bound: 2^{1/p'} max(1, int_{Re s}^inf ||delta_t||_{(A^p_{mu,0})^*} dt),
// integrand from the zero-constant variant. Throws QuadratureError when the
// tail fails to converge.
EvalBound eval_bound_dp(const MeasureSpec& mu, std::complex<double> s, double p);

// Weighted Bergman space of the unit disk: bound on ||delta_z||.
EvalBound disk_eval_bound(const std::function<double(double)>& weight,
                          std::complex<double> z, double p,
                          const std::vector<double>& eta_grid);

// Comparison table of evaluation norms across p for one space and point.
struct AnnexeEntry {
    double p = 0.0;
    std::optional<double> exact;
    std::optional<double> lower;
    std::optional<double> upper;
};
struct AnnexeCheck {
    std::string name;
    bool pass = false;
    double lhs = 0.0, rhs = 0.0;
};
struct AnnexeReport {
    std::string space;
    std::complex<double> s;
    std::vector<AnnexeEntry> entries;
    std::vector<AnnexeCheck> checks;
    bool all_pass = true;

    std::string to_json() const;
};

AnnexeReport annexe_compare(const std::string& space, std::complex<double> s,
                            const std::vector<double>& p_list, const MeasureSpec* mu,
                            const SamplerConfig& cfg);

} // namespace dirspace
