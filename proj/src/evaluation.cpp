#include "dirspace/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirspace/json_out.hpp"
#include "dirspace/multiplicative.hpp"
#include "dirspace/special.hpp"

namespace dirspace {

const char* eval_kind_name(EvalKind k) {
    switch (k) {
        case EvalKind::Exact: return "exact";
        case EvalKind::UpperBound: return "upper-bound";
        case EvalKind::LowerBound: return "lower-bound";
    }
    return "?";
}

std::string EvalBound::to_json() const {
    std::string out = "{\"value\": " + format_double(value) + ", \"kind\": \"" +
                      eval_kind_name(kind) + "\", \"space\": \"" + space +
                      "\", \"s\": [" + format_double(s.real()) + ", " +
                      format_double(s.imag()) + "], \"p\": " + format_double(p);
    if (!measure.empty()) out += ", \"measure\": \"" + json_escape(measure) + "\"";
    if (std_error > 0.0) out += ", \"std_error\": " + format_double(std_error);
    out += "}";
    return out;
}

namespace {

void require_half_plane(std::complex<double> s) {
    if (!(s.real() > 0.5))
        throw std::domain_error("point evaluation: Re(s) > 1/2 required");
}

// Evaluation-norm kernels parameterized by u = x - 1/2 > 0, the distance to
// the critical line, so integrands stay accurate when u underruns rounding.
double delta_hp_u(double u, double p) {
    return std::pow(riemann_zeta_one_plus(2.0 * u), 1.0 / p);
}

double delta_hp(double x, double p) { return delta_hp_u(x - 0.5, p); }

// Majorant on the zero-constant-coefficient subspace: Delta_{p,0} <= Delta_p;
// <= 1/(x-1) for x > 1; and for p >= 2 the H^2 kernel with the n = 1 term
// dropped gives (zeta(2x) - 1)^{1/2}.
double delta_hp_zero_u(double u, double p) {
    double v = delta_hp_u(u, p);
    if (u > 0.5) v = std::min(v, 1.0 / (u - 0.5));
    if (p >= 2.0) v = std::min(v, std::sqrt(zeta_like_sum(2.0 * u, 0.0, 2)));
    return v;
}

} // namespace

EvalBound eval_norm_hp(std::complex<double> s, double p) {
    require_half_plane(s);
    if (!(p >= 1.0)) throw std::invalid_argument("eval_norm_hp: p >= 1 required");
    EvalBound b;
    b.value = delta_hp(s.real(), p);
    b.kind = EvalKind::Exact;
    b.space = "hp";
    b.s = s;
    b.p = p;
    return b;
}

EvalBound eval_norm_bp(std::complex<double> s, double p) {
    require_half_plane(s);
    if (!(p >= 1.0)) throw std::invalid_argument("eval_norm_bp: p >= 1 required");
    EvalBound b;
    b.value = std::pow(riemann_zeta(2.0 * s.real()), 2.0 / p);
    b.kind = EvalKind::Exact;
    b.space = "bp";
    b.s = s;
    b.p = p;
    return b;
}

KernelValue kernel_a2(const MeasureSpec& mu, std::complex<double> s,
                      std::complex<double> w, std::uint64_t N) {
    require_half_plane(s);
    require_half_plane(w);
    const double x = s.real() + w.real();
    if (!(x > 1.0)) throw std::domain_error("kernel_a2: Re(s) + Re(w) > 1 required");

    WeightSequence weights(mu);
    const std::complex<double> expo = -(w + std::conj(s));
    KernelValue out;
    out.value = 0.0;
    double c_witness = 1.0;
    const double eps = std::min(0.1, (x - 1.0) / 4.0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double wn = weights(n);
        out.value += std::exp(expo * std::log((double)n)) / wn;
        c_witness = std::min(c_witness, wn * std::pow((double)n, eps));
    }
    // tail <= (1/c) sum_{n>N} n^{-(x-eps)} <= (1/c) N^{1-x+eps}/(x-1-eps)
    out.tail_bound = std::pow((double)N, 1.0 - x + eps) / ((x - 1.0 - eps) * c_witness);
    return out;
}

EvalBound eval_norm_a2(const MeasureSpec& mu, std::complex<double> s) {
    require_half_plane(s);
    EvalBound b;
    b.kind = EvalKind::Exact;
    b.space = "a2";
    b.s = s;
    b.p = 2.0;
    b.measure = mu.describe();
    const double sigma = s.real();
    switch (mu.kind()) {
        case MeasureSpec::Kind::DiracZero:
            b.value = std::sqrt(riemann_zeta(2.0 * sigma));
            return b;
        case MeasureSpec::Kind::Alpha:
            // sum (1+log n)^{1+alpha} n^{-2 sigma}
            b.value = std::sqrt(log_weight_zeta_sum(2.0 * sigma, 1.0 + mu.alpha_param()));
            return b;
        case MeasureSpec::Kind::Density: {
            const std::uint64_t N = 20000;
            KernelValue k = kernel_a2(mu, s, s, N);
            b.value = std::sqrt(k.value.real());
            b.std_error = k.tail_bound / (2.0 * std::max(b.value, 1e-300));
            return b;
        }
    }
    throw std::logic_error("eval_norm_a2: unknown measure kind");
}

EvalBound eval_bound_ap_even(const MeasureSpec& mu, std::complex<double> s, int p) {
    if (p < 2 || p % 2 != 0)
        throw std::invalid_argument("eval_bound_ap_even: even p >= 2 required");
    EvalBound b = eval_norm_a2(mu, s);
    b.value = std::pow(b.value, 2.0 / p);
    b.kind = p == 2 ? EvalKind::Exact : EvalKind::UpperBound;
    b.space = "ap";
    b.p = p;
    return b;
}

std::vector<double> default_eta_grid(double sigma_minus_half, int count) {
    // log-spaced inside (0, sigma - 1/2), from half the interval downward
    std::vector<double> grid;
    const double top = 0.5 * sigma_minus_half;
    const double ratio = std::pow(1e-5, 1.0 / std::max(1, count - 1));
    double eta = top;
    for (int i = 0; i < count; ++i) {
        grid.push_back(eta);
        eta *= ratio;
    }
    return grid;
}

EvalBound eval_bound_ap_general(const MeasureSpec& mu, std::complex<double> s, double p,
                                const std::vector<double>& eta_grid, bool zero_constant) {
    require_half_plane(s);
    if (!(p >= 1.0)) throw std::invalid_argument("eval_bound_ap_general: p >= 1 required");
    if (eta_grid.empty()) throw std::invalid_argument("eval_bound_ap_general: empty eta grid");
    const double sigma = s.real();
    const double s_half = sigma - 0.5;

    // kernel as a function of u = distance of the evaluation argument to 1/2
    auto kernel_u = [&](double u) {
        return zero_constant ? delta_hp_zero_u(u, p) : delta_hp_u(u, p);
    };

    EvalBound b;
    b.kind = EvalKind::UpperBound;
    b.space = zero_constant ? "ap0" : "ap";
    b.s = s;
    b.p = p;
    b.measure = mu.describe();

    if (mu.kind() == MeasureSpec::Kind::DiracZero) {
        // mass 1 at 0: the quotient is Delta_p(sigma) for every eta
        b.value = kernel_u(s_half);
        return b;
    }

    const double pprime = p > 1.0 ? p / (p - 1.0) : -1.0;
    double best = std::numeric_limits<double>::infinity();
    for (double eta : eta_grid) {
        if (!(eta > 0.0) || eta >= s_half) continue;
        const double A = s_half - eta;
        const double mass = interval_mass(mu, A);
        if (!(mass > 0.0)) continue;
        double numerator;
        if (p == 1.0) {
            numerator = kernel_u(eta); // sup over [0, A], kernel decreasing
        } else {
            // left half in eps (u = s_half - eps stays >= A/2); right half in
            // v = log u, which flattens the kernel blow-up cut off at eta
            const double split = A / 2.0;
            double J = adaptive_integrate(
                           [&](double epsv) {
                               return std::pow(kernel_u(s_half - epsv), pprime) *
                                      mu.density_at(epsv);
                           },
                           0.0, split, 1e-8)
                           .value;
            J += adaptive_integrate(
                     [&](double v) {
                         const double u = std::exp(v);
                         return std::pow(kernel_u(u), pprime) *
                                mu.density_at(s_half - u) * u;
                     },
                     std::log(eta), std::log(s_half - split), 1e-8)
                     .value;
            numerator = std::pow(J, 1.0 / pprime);
        }
        best = std::min(best, numerator / mass);
    }
    if (!std::isfinite(best))
        throw QuadratureError("eval_bound_ap_general: no usable eta in the grid");
    b.value = best;
    return b;
}

EvalBound eval_lower_ap(const MeasureSpec& mu, double sigma, double p, std::uint32_t N,
                        const SamplerConfig& cfg) {
    if (!(sigma > 0.5)) throw std::domain_error("eval_lower_ap: sigma > 1/2 required");
    if (!(p > 1.0)) throw std::invalid_argument("eval_lower_ap: p > 1 required");

    std::vector<double> c = zeta_power_coeffs(2.0 / p, N);
    DirichletPolynomial F(N);
    double value_at_sigma = 0.0;
    for (std::uint32_t n = 1; n <= N; ++n) {
        const double a = c[n - 1] * std::pow((double)n, -sigma);
        F.set_coeff(n, a);
        value_at_sigma += a * std::pow((double)n, -sigma);
    }

    EvalBound b;
    b.kind = EvalKind::LowerBound;
    b.space = "ap";
    b.s = sigma;
    b.p = p;
    b.measure = mu.describe();

    NormEstimate norm = ap_norm(F, mu, p, cfg);
    if (norm.std_error > 0.0) {
        b.value = value_at_sigma / (norm.value + 2.0 * norm.std_error);
        b.std_error = norm.std_error * value_at_sigma /
                      ((norm.value + 2.0 * norm.std_error) * norm.value);
    } else {
        b.value = value_at_sigma / norm.value;
    }
    return b;
}

EvalBound eval_bound_dp(const MeasureSpec& mu, std::complex<double> s, double p) {
    require_half_plane(s);
    if (!(p >= 1.0)) throw std::invalid_argument("eval_bound_dp: p >= 1 required");
    const double sigma = s.real();
    const double pprime_inv = p > 1.0 ? (p - 1.0) / p : 0.0; // 1/p'

    auto integrand = [&](double t) {
        return eval_bound_ap_general(mu, t, p, default_eta_grid(t - 0.5, 4), true).value;
    };

    // [sigma, sigma+1], then octaves; the tail must decay or be reported.
    double total = integrate_gl(integrand, sigma, sigma + 1.0, 16);
    double prev_block = std::numeric_limits<double>::infinity();
    double lo = sigma + 1.0;
    bool converged = false;
    for (int k = 0; k < 24; ++k) {
        const double hi = sigma + std::pow(2.0, k + 1);
        const double block = integrate_gl(integrand, lo, hi, 16);
        total += block;
        if (block <= 1e-10 * std::max(total, 1.0)) {
            converged = true;
            break;
        }
        if (k >= 3 && block > 0.75 * prev_block)
            throw QuadratureError(
                "eval_bound_dp: tail of the evaluation-norm integral does not converge");
        prev_block = block;
        lo = hi;
    }
    if (!converged)
        throw QuadratureError("eval_bound_dp: tail integration did not terminate");

    EvalBound b;
    b.kind = EvalKind::UpperBound;
    b.space = "dp";
    b.s = s;
    b.p = p;
    b.measure = mu.describe();
    b.value = std::pow(2.0, pprime_inv) * std::max(1.0, total);
    return b;
}

EvalBound disk_eval_bound(const std::function<double(double)>& weight,
                          std::complex<double> z, double p,
                          const std::vector<double>& eta_grid) {
    const double az = std::abs(z);
    if (!(az < 1.0)) throw std::domain_error("disk_eval_bound: |z| < 1 required");
    if (eta_grid.empty()) throw std::invalid_argument("disk_eval_bound: empty eta grid");
    const double pprime = p > 1.0 ? p / (p - 1.0) : -1.0;

    // 1 - (az/r)^2 evaluated from the distance x = r - az:
    // (1-q)(1+q) with 1-q = x/(az+x), stable for x << az.
    auto kernel_pow = [&](double x, double expo) {
        const double r = az + x;
        const double one_minus_q2 = (x / r) * (1.0 + az / r);
        return std::pow(one_minus_q2, expo);
    };

    double best = std::numeric_limits<double>::infinity();
    for (double eta : eta_grid) {
        if (!(eta > 0.0) || eta >= 1.0 - az) continue;
        IntegralResult S = adaptive_integrate(weight, az + eta, 1.0, 1e-10);
        if (!(S.value > 0.0)) continue;
        double numerator;
        if (p == 1.0) {
            numerator = kernel_pow(eta, -1.0 / p); // sup at r = az + eta
        } else {
            // integrate in v = log(r - az); the algebraic blow-up at r = az
            // cut off at eta becomes a bounded integrand
            IntegralResult r = adaptive_integrate(
                [&](double v) {
                    const double x = std::exp(v);
                    return kernel_pow(x, -pprime / p) * weight(az + x) * x;
                },
                std::log(eta), std::log(1.0 - az), 1e-10);
            numerator = std::pow(r.value, 1.0 / pprime);
        }
        best = std::min(best, numerator / S.value);
    }
    if (!std::isfinite(best))
        throw QuadratureError("disk_eval_bound: no usable eta in the grid");

    EvalBound b;
    b.value = best;
    b.kind = EvalKind::UpperBound;
    b.space = "disk";
    b.s = z;
    b.p = p;
    return b;
}

namespace {

bool is_even_int(double p) { return p >= 2.0 && p == std::floor(p) && ((long long)p) % 2 == 0; }

} // namespace

std::string AnnexeReport::to_json() const {
    std::string out = "{\"space\": \"" + space + "\", \"sigma\": " + format_double(s.real()) +
                      ", \"entries\": [";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        const AnnexeEntry& e = entries[i];
        out += "{\"p\": " + format_double(e.p);
        if (e.exact) out += ", \"exact\": " + format_double(*e.exact);
        if (e.lower) out += ", \"lower\": " + format_double(*e.lower);
        if (e.upper) out += ", \"upper\": " + format_double(*e.upper);
        out += "}";
    }
    out += "], \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (i) out += ", ";
        out += "{\"name\": \"" + json_escape(checks[i].name) + "\", \"pass\": " +
               (checks[i].pass ? "true" : "false") + ", \"lhs\": " + format_double(checks[i].lhs) +
               ", \"rhs\": " + format_double(checks[i].rhs) + "}";
    }
    out += "], \"all_pass\": ";
    out += all_pass ? "true" : "false";
    out += "}";
    return out;
}

AnnexeReport annexe_compare(const std::string& space, std::complex<double> s,
                            const std::vector<double>& p_list, const MeasureSpec* mu,
                            const SamplerConfig& cfg) {
    AnnexeReport rep;
    rep.space = space;
    rep.s = s;

    auto add_check = [&](std::string name, bool pass, double lhs, double rhs) {
        rep.checks.push_back({std::move(name), pass, lhs, rhs});
        rep.all_pass = rep.all_pass && rep.checks.back().pass;
    };
    const double rel_tol = 1e-12;

    if (space == "hp" || space == "bp") {
        for (double p : p_list) {
            AnnexeEntry e;
            e.p = p;
            e.exact = space == "hp" ? eval_norm_hp(s, p).value : eval_norm_bp(s, p).value;
            rep.entries.push_back(e);
        }
        auto value_of = [&](double p) {
            for (const auto& e : rep.entries)
                if (e.p == p) return *e.exact;
            return space == "hp" ? eval_norm_hp(s, p).value : eval_norm_bp(s, p).value;
        };
        // (i) 1/p = 1/q1 + 1/q2 => N_p >= N_q1 N_q2 (equality for these spaces)
        for (double q1 : p_list)
            for (double q2 : p_list) {
                const double pr = 1.0 / (1.0 / q1 + 1.0 / q2);
                if (pr < 1.0) continue;
                const double lhs = value_of(pr), rhs = value_of(q1) * value_of(q2);
                add_check("product q1=" + format_double(q1) + " q2=" + format_double(q2),
                          std::fabs(lhs - rhs) <= rel_tol * std::fabs(rhs) && lhs >= rhs * (1 - rel_tol),
                          lhs, rhs);
            }
        // (ii) monotone, (iii) N_{pm} = N_p^{1/m}
        for (std::size_t i = 0; i < p_list.size(); ++i)
            for (std::size_t j = 0; j < p_list.size(); ++j) {
                if (p_list[i] < p_list[j]) {
                    const double lhs = value_of(p_list[i]), rhs = value_of(p_list[j]);
                    add_check("monotone p=" + format_double(p_list[i]) +
                                  " q=" + format_double(p_list[j]),
                              lhs >= rhs * (1 - rel_tol), lhs, rhs);
                }
                for (int m = 2; m <= 4; ++m) {
                    if (std::fabs(p_list[j] - m * p_list[i]) < 1e-9) {
                        const double lhs = value_of(p_list[j]);
                        const double rhs = std::pow(value_of(p_list[i]), 1.0 / m);
                        add_check("power p=" + format_double(p_list[i]) + " m=" + std::to_string(m),
                                  std::fabs(lhs - rhs) <= rel_tol * std::fabs(rhs), lhs, rhs);
                    }
                }
            }
        return rep;
    }

    if (space != "ap" || mu == nullptr)
        throw std::invalid_argument("annexe_compare: space must be hp, bp or ap (with measure)");

    for (double p : p_list) {
        AnnexeEntry e;
        e.p = p;
        if (p == 2.0) {
            e.exact = eval_norm_a2(*mu, s).value;
            e.lower = eval_lower_ap(*mu, s.real(), p, 10000, cfg).value;
            e.upper = e.exact;
        } else if (is_even_int(p)) {
            e.upper = eval_bound_ap_even(*mu, s, (int)p).value;
            e.lower = eval_lower_ap(*mu, s.real(), p, 2000, cfg).value;
        } else {
            e.upper = eval_bound_ap_general(*mu, s, p, default_eta_grid(s.real() - 0.5)).value;
            e.lower = eval_lower_ap(*mu, s.real(), p, 2000, cfg).value;
        }
        rep.entries.push_back(e);
    }
    // sandwich per p, and no inversion across p (q >= p => N_p >= N_q on bounds)
    for (const auto& e : rep.entries) {
        add_check("sandwich p=" + format_double(e.p), *e.lower <= *e.upper * (1 + 1e-12),
                  *e.lower, *e.upper);
        if (e.exact) {
            add_check("lower<=exact p=" + format_double(e.p),
                      *e.lower <= *e.exact * (1 + 1e-12), *e.lower, *e.exact);
        }
    }
    for (const auto& ei : rep.entries)
        for (const auto& ej : rep.entries)
            if (ei.p < ej.p)
                add_check("no-inversion p=" + format_double(ei.p) + " q=" + format_double(ej.p),
                          *ej.lower <= *ei.upper * (1 + 1e-12), *ej.lower, *ei.upper);
    return rep;
}

} // namespace dirspace
