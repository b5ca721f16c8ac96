#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dirspace/quadrature.hpp"

namespace dirspace {

// A density on (0, infinity) with a finite effective support and a certified
// tail: callers must bound the mass beyond `cutoff`. Densities without a tail
// certificate are refused.
struct DensitySpec {
    std::string name;
    std::function<double(double)> h;
    double cutoff = 0.0;
    double tail_mass_bound = -1.0; // bound on int_cutoff^inf h
};

// Probability measure on (0, infinity) with 0 in its support: the mu_alpha
// family (density ~ sigma^alpha e^{-2 sigma}), the Dirac mass at 0, or a
// user density.
class MeasureSpec {
public:
    enum class Kind { Alpha, DiracZero, Density };

    static MeasureSpec alpha(double a);
    static MeasureSpec dirac_zero();
    static MeasureSpec density(DensitySpec d);

    Kind kind() const { return kind_; }
    double alpha_param() const { return alpha_; }
    const DensitySpec& density_spec() const { return density_; }

    bool has_density() const { return kind_ != Kind::DiracZero; }
    // Pointwise density value (Alpha or Density kinds only).
    double density_at(double sigma) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::DiracZero;
    double alpha_ = 0.0;
    DensitySpec density_;
};

// int g dmu. For mu_alpha this is generalized Gauss-Laguerre with weight
// t^alpha e^{-t} after t = 2 sigma, node count doubled until two successive
// counts agree; for a density it is adaptive panel quadrature on (0, cutoff]
// plus the certified tail bound. `tail_value_bound` bounds |g| past the
// cutoff (defaults to |g(cutoff)|, right for non-increasing integrands).
IntegralResult integrate(const MeasureSpec& mu, const std::function<double(double)>& g,
                         double tol = 1e-11, double tail_value_bound = -1.0);

// w_n = int n^{-2 sigma} dmu. Closed form (1+log n)^{-1-alpha} for mu_alpha,
// 1 for the Dirac mass, quadrature otherwise (error <= 1e-10 or throws).
double bergman_weight(const MeasureSpec& mu, std::uint64_t n);

// w~_n = int n^{-sigma} dmu; always >= w_n.
double tilde_weight(const MeasureSpec& mu, std::uint64_t n);

// beta_h(sigma) = int_0^sigma (sigma - u) h(u) du (double primitive of the
// density). Throws std::domain_error for the Dirac mass.
double beta_h(const MeasureSpec& mu, double sigma);

// mu([0, A]).
double interval_mass(const MeasureSpec& mu, double A);

// Discretization (sigma_i, omega_i) with int g dmu ~ sum omega_i g(sigma_i),
// accurate to ~1e-10 for the smooth integrands sigma -> ||f_sigma||^p used by
// the sampling layer.
struct MeasureNodes {
    std::vector<double> sigma;
    std::vector<double> weight;
};
MeasureNodes measure_nodes(const MeasureSpec& mu, int order_hint = 96);

// Lazily extended table of Bergman weights, safe for concurrent readers.
class WeightSequence {
public:
    explicit WeightSequence(MeasureSpec mu) : mu_(std::move(mu)) {}

    double operator()(std::uint64_t n) const;
    const MeasureSpec& measure() const { return mu_; }

private:
    MeasureSpec mu_;
    mutable std::mutex mutex_;
    mutable std::vector<double> values_; // values_[n-1] = w_n
};

// Built-in density registry for configs: "exp" (lambda) and "uniform" (b).
MeasureSpec measure_from_config(const std::string& json_text);
std::string measure_to_config(const MeasureSpec& mu);

} // namespace dirspace
