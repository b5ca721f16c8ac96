#pragma once

#include <functional>
#include <vector>

#include "dirspace/special.hpp"

namespace dirspace {

struct QuadratureError : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]; cached per order.
const QuadratureRule& gauss_legendre(int order);

// Fixed-order Gauss-Legendre on [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order = 15);

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive bisection with a 15-point Gauss panel; the panel-vs-halves
// difference drives refinement. Throws QuadratureError when the tolerance is
// unreachable within the depth limit.
IntegralResult adaptive_integrate(const std::function<double(double)>& f, double a,
                                  double b, double tol_rel = 1e-12,
                                  double tol_abs = 1e-300, int max_depth = 100);

// Generalized Gauss-Laguerre: nodes/weights for int_0^inf t^alpha e^-t f(t) dt
// via the Golub-Welsch eigenvalue method; cached per (alpha, order).
const QuadratureRule& gauss_laguerre(double alpha, int order);

} // namespace dirspace
