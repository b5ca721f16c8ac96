#include "dirspace/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "dirspace/json_out.hpp"
#include "dirspace/special.hpp"

#include <json.hpp>

namespace dirspace {

namespace {
double alpha_norm_const(double a) { return std::pow(2.0, a + 1.0) / std::exp(std::lgamma(a + 1.0)); }
} // namespace

MeasureSpec MeasureSpec::alpha(double a) {
    if (!(a > -1.0)) throw std::domain_error("MeasureSpec::alpha: alpha > -1 required");
    MeasureSpec m;
    m.kind_ = Kind::Alpha;
    m.alpha_ = a;
    return m;
}

MeasureSpec MeasureSpec::dirac_zero() {
    MeasureSpec m;
    m.kind_ = Kind::DiracZero;
    return m;
}

MeasureSpec MeasureSpec::density(DensitySpec d) {
    if (!d.h) throw std::invalid_argument("MeasureSpec::density: missing density function");
    if (!(d.cutoff > 0.0))
        throw std::invalid_argument("MeasureSpec::density: positive cutoff required");
    if (d.tail_mass_bound < 0.0)
        throw std::invalid_argument("MeasureSpec::density: tail certificate required");

    // total mass 1 to 1e-8
    IntegralResult body = adaptive_integrate(d.h, 0.0, d.cutoff, 1e-10);
    if (std::fabs(body.value - 1.0) > 1e-8 + d.tail_mass_bound)
        throw std::invalid_argument("MeasureSpec::density: density does not normalize to 1");

    // 0 in support: positive somewhere arbitrarily close to 0
    const double delta = std::min(1e-3, d.cutoff / 16.0);
    bool positive_near_zero = false;
    for (int k = 1; k <= 32; ++k) {
        if (d.h(delta * k / 32.0) > 0.0) {
            positive_near_zero = true;
            break;
        }
    }
    if (!positive_near_zero)
        throw std::invalid_argument("MeasureSpec::density: density vanishes near 0");

    MeasureSpec m;
    m.kind_ = Kind::Density;
    m.density_ = std::move(d);
    return m;
}

double MeasureSpec::density_at(double sigma) const {
    switch (kind_) {
        case Kind::Alpha:
            if (sigma <= 0.0) return 0.0;
            return alpha_norm_const(alpha_) * std::pow(sigma, alpha_) * std::exp(-2.0 * sigma);
        case Kind::Density:
            return sigma <= 0.0 ? 0.0 : density_.h(sigma);
        case Kind::DiracZero:
            throw std::domain_error("density_at: Dirac mass has no density");
    }
    return 0.0;
}

std::string MeasureSpec::describe() const {
    switch (kind_) {
        case Kind::Alpha: return "alpha(" + format_double(alpha_) + ")";
        case Kind::DiracZero: return "dirac0";
        case Kind::Density: return "density(" + density_.name + ")";
    }
    return "?";
}

IntegralResult integrate(const MeasureSpec& mu, const std::function<double(double)>& g,
                         double tol, double tail_value_bound) {
    switch (mu.kind()) {
        case MeasureSpec::Kind::DiracZero:
            return {g(0.0), 0.0};
        case MeasureSpec::Kind::Alpha: {
            const double a = mu.alpha_param();
            const double inv_gamma = 1.0 / std::exp(std::lgamma(a + 1.0));
            double prev = 0.0;
            for (int order = 24; order <= 1536; order *= 2) {
                const QuadratureRule& rule = gauss_laguerre(a, order);
                double sum = 0.0;
                for (int i = 0; i < order; ++i)
                    sum += rule.weights[i] * g(rule.nodes[i] / 2.0);
                sum *= inv_gamma;
                if (order > 24 &&
                    std::fabs(sum - prev) <= tol * std::max(1.0, std::fabs(sum)))
                    return {sum, std::fabs(sum - prev)};
                prev = sum;
            }
            throw QuadratureError("integrate(mu_alpha): node doubling did not converge");
        }
        case MeasureSpec::Kind::Density: {
            const DensitySpec& d = mu.density_spec();
            auto integrand = [&](double s) { return g(s) * d.h(s); };
            IntegralResult body = adaptive_integrate(integrand, 0.0, d.cutoff, tol);
            double gb = tail_value_bound >= 0.0 ? tail_value_bound : std::fabs(g(d.cutoff));
            body.error_estimate += gb * d.tail_mass_bound;
            return body;
        }
    }
    throw std::logic_error("integrate: unknown measure kind");
}

double bergman_weight(const MeasureSpec& mu, std::uint64_t n) {
    if (n < 1) throw std::out_of_range("bergman_weight: n >= 1 required");
    switch (mu.kind()) {
        case MeasureSpec::Kind::DiracZero:
            return 1.0;
        case MeasureSpec::Kind::Alpha:
            return std::pow(1.0 + std::log((double)n), -1.0 - mu.alpha_param());
        case MeasureSpec::Kind::Density: {
            const double ln = std::log((double)n);
            IntegralResult r = integrate(
                mu, [&](double s) { return std::exp(-2.0 * s * ln); }, 1e-12);
            if (r.error_estimate > 1e-10)
                throw QuadratureError("bergman_weight: quadrature error above 1e-10");
            return r.value;
        }
    }
    throw std::logic_error("bergman_weight: unknown measure kind");
}

double tilde_weight(const MeasureSpec& mu, std::uint64_t n) {
    if (n < 1) throw std::out_of_range("tilde_weight: n >= 1 required");
    switch (mu.kind()) {
        case MeasureSpec::Kind::DiracZero:
            return 1.0;
        case MeasureSpec::Kind::Alpha: {
            const double ln = std::log((double)n);
            return std::pow(2.0 / (2.0 + ln), 1.0 + mu.alpha_param());
        }
        case MeasureSpec::Kind::Density: {
            const double ln = std::log((double)n);
            IntegralResult r = integrate(
                mu, [&](double s) { return std::exp(-s * ln); }, 1e-12);
            if (r.error_estimate > 1e-10)
                throw QuadratureError("tilde_weight: quadrature error above 1e-10");
            return r.value;
        }
    }
    throw std::logic_error("tilde_weight: unknown measure kind");
}

double beta_h(const MeasureSpec& mu, double sigma) {
    if (mu.kind() == MeasureSpec::Kind::DiracZero)
        throw std::domain_error("beta_h: measure has no density");
    if (sigma <= 0.0) return 0.0;
    if (mu.kind() == MeasureSpec::Kind::Alpha) {
        // beta = sigma P(a+1, 2 sigma) - ((a+1)/2) P(a+2, 2 sigma)
        const double a = mu.alpha_param();
        return sigma * gamma_p(a + 1.0, 2.0 * sigma) -
               0.5 * (a + 1.0) * gamma_p(a + 2.0, 2.0 * sigma);
    }
    const DensitySpec& d = mu.density_spec();
    const double hi = std::min(sigma, d.cutoff);
    IntegralResult r = adaptive_integrate(
        [&](double u) { return (sigma - u) * d.h(u); }, 0.0, hi, 1e-12);
    return r.value;
}

double interval_mass(const MeasureSpec& mu, double A) {
    if (A < 0.0) return 0.0;
    switch (mu.kind()) {
        case MeasureSpec::Kind::DiracZero:
            return 1.0;
        case MeasureSpec::Kind::Alpha:
            return gamma_p(mu.alpha_param() + 1.0, 2.0 * A);
        case MeasureSpec::Kind::Density: {
            const DensitySpec& d = mu.density_spec();
            IntegralResult r = adaptive_integrate(d.h, 0.0, std::min(A, d.cutoff), 1e-11);
            return std::min(1.0, r.value);
        }
    }
    throw std::logic_error("interval_mass: unknown measure kind");
}

MeasureNodes measure_nodes(const MeasureSpec& mu, int order_hint) {
    MeasureNodes out;
    switch (mu.kind()) {
        case MeasureSpec::Kind::DiracZero:
            out.sigma = {0.0};
            out.weight = {1.0};
            return out;
        case MeasureSpec::Kind::Alpha: {
            const double a = mu.alpha_param();
            const double inv_gamma = 1.0 / std::exp(std::lgamma(a + 1.0));
            const QuadratureRule& rule = gauss_laguerre(a, order_hint);
            for (int i = 0; i < order_hint; ++i) {
                out.sigma.push_back(rule.nodes[i] / 2.0);
                out.weight.push_back(rule.weights[i] * inv_gamma);
            }
            return out;
        }
        case MeasureSpec::Kind::Density: {
            // geometric panels toward 0, Gauss-Legendre inside each panel
            const DensitySpec& d = mu.density_spec();
            const QuadratureRule& rule = gauss_legendre(16);
            std::vector<double> edges;
            double lo = d.cutoff;
            for (int k = 0; k < 40 && lo > 1e-12; ++k) {
                edges.push_back(lo);
                lo *= 0.5;
            }
            edges.push_back(0.0);
            for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
                double b = edges[e], a2 = edges[e + 1];
                double mid = 0.5 * (a2 + b), half = 0.5 * (b - a2);
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    double s = mid + half * rule.nodes[i];
                    out.sigma.push_back(s);
                    out.weight.push_back(half * rule.weights[i] * d.h(s));
                }
            }
            return out;
        }
    }
    throw std::logic_error("measure_nodes: unknown measure kind");
}

double WeightSequence::operator()(std::uint64_t n) const {
    if (n < 1) throw std::out_of_range("WeightSequence: n >= 1 required");
    std::lock_guard<std::mutex> lock(mutex_);
    if (values_.size() < n) {
        std::size_t old = values_.size();
        values_.resize(n);
        for (std::size_t k = old; k < n; ++k) values_[k] = bergman_weight(mu_, k + 1);
    }
    return values_[n - 1];
}

MeasureSpec measure_from_config(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    const std::string type = j.at("type").get<std::string>();
    if (type == "alpha") return MeasureSpec::alpha(j.at("alpha").get<double>());
    if (type == "dirac0") return MeasureSpec::dirac_zero();
    if (type == "density") {
        const std::string name = j.at("name").get<std::string>();
        if (name == "exp") {
            const double lambda = j.value("lambda", 2.0);
            if (!(lambda > 0)) throw std::invalid_argument("density exp: lambda > 0");
            double cutoff = j.value("cutoff", 60.0 / lambda);
            DensitySpec d;
            d.name = "exp";
            d.h = [lambda](double s) { return lambda * std::exp(-lambda * s); };
            d.cutoff = cutoff;
            d.tail_mass_bound = std::exp(-lambda * cutoff);
            return MeasureSpec::density(std::move(d));
        }
        if (name == "uniform") {
            const double b = j.value("b", 1.0);
            if (!(b > 0)) throw std::invalid_argument("density uniform: b > 0");
            DensitySpec d;
            d.name = "uniform";
            d.h = [b](double s) { return s <= b ? 1.0 / b : 0.0; };
            d.cutoff = b;
            d.tail_mass_bound = 0.0;
            return MeasureSpec::density(std::move(d));
        }
        throw std::invalid_argument("measure_from_config: unknown density name " + name);
    }
    throw std::invalid_argument("measure_from_config: unknown measure type " + type);
}

std::string measure_to_config(const MeasureSpec& mu) {
    switch (mu.kind()) {
        case MeasureSpec::Kind::Alpha:
            return "{\"type\": \"alpha\", \"alpha\": " + format_double(mu.alpha_param()) + "}";
        case MeasureSpec::Kind::DiracZero:
            return "{\"type\": \"dirac0\"}";
        case MeasureSpec::Kind::Density:
            return "{\"type\": \"density\", \"name\": \"" + json_escape(mu.density_spec().name) +
                   "\", \"cutoff\": " + format_double(mu.density_spec().cutoff) + "}";
    }
    return "{}";
}

} // namespace dirspace
