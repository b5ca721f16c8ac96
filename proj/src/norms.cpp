#include "dirspace/norms.hpp"

#include <cmath>

#include "dirspace/json_out.hpp"
#include "dirspace/multiplicative.hpp"
#include "dirspace/parallel.hpp"
#include "dirspace/rng.hpp"

namespace dirspace {

std::string NormEstimate::to_json() const {
    std::string out = "{\"value\": " + format_double(value) +
                      ", \"std_error\": " + format_double(std_error) +
                      ", \"samples\": " + std::to_string(samples) +
                      ", \"method\": \"" + method + "\"";
    if (has_seed) out += ", \"seed\": " + std::to_string(seed);
    out += "}";
    return out;
}

Character sample_character(const SamplerConfig& cfg, std::uint64_t stream_index) {
    CounterRng rng(cfg.seed, stream_index);
    Character chi;
    chi.coords.reserve(cfg.K);
    for (std::uint32_t j = 0; j < cfg.K; ++j) {
        chi.coords.push_back(cfg.domain == SamplerConfig::Domain::Torus
                                 ? rng.next_unit_circle()
                                 : rng.next_unit_disk());
    }
    return chi;
}

NormEstimate h2_norm(const DirichletPolynomial& f) {
    double s = 0.0;
    for (const Complex& a : f.coeffs()) s += std::norm(a);
    return {std::sqrt(s), 0.0, 0, "exact", 0, false};
}

NormEstimate a2_norm(const DirichletPolynomial& f, const MeasureSpec& mu) {
    double s = 0.0;
    bool quadrature = mu.kind() == MeasureSpec::Kind::Density;
    for (std::uint32_t n : f.support()) s += std::norm(f.coeff(n)) * bergman_weight(mu, n);
    return {std::sqrt(s), 0.0, 0, quadrature ? "quadrature" : "exact", 0, false};
}

NormEstimate b2_norm(const DirichletPolynomial& f) {
    double s = 0.0;
    for (std::uint32_t n : f.support())
        s += std::norm(f.coeff(n)) / (double)divisor_count(n);
    return {std::sqrt(s), 0.0, 0, "exact", 0, false};
}

namespace {

// f^m computed exactly; throws when the full product exceeds the budget.
DirichletPolynomial power_full(const DirichletPolynomial& f, int m,
                               std::uint64_t coefficient_budget) {
    std::uint64_t n_out = 1;
    for (int i = 0; i < m; ++i) {
        n_out *= f.length();
        if (n_out > coefficient_budget)
            throw BudgetExceeded("even-p norm: full product exceeds coefficient budget");
    }
    DirichletPolynomial g = f;
    std::uint64_t len = f.length();
    for (int i = 1; i < m; ++i) {
        len *= f.length();
        g = multiply(g, f, len);
    }
    return g;
}

int even_half(int p) {
    if (p < 2 || p % 2 != 0)
        throw std::invalid_argument("even-p norm: p must be an even integer >= 2");
    return p / 2;
}

} // namespace

NormEstimate even_hp_norm(const DirichletPolynomial& f, int p,
                          std::uint64_t coefficient_budget) {
    const int m = even_half(p);
    DirichletPolynomial g = power_full(f, m, coefficient_budget);
    double s = 0.0;
    for (const Complex& a : g.coeffs()) s += std::norm(a);
    return {std::pow(s, 1.0 / p), 0.0, 0, "exact", 0, false};
}

NormEstimate even_ap_norm(const DirichletPolynomial& f, const MeasureSpec& mu, int p,
                          std::uint64_t coefficient_budget) {
    const int m = even_half(p);
    DirichletPolynomial g = power_full(f, m, coefficient_budget);
    WeightSequence w(mu);
    double s = 0.0;
    for (std::uint32_t n : g.support()) s += std::norm(g.coeff(n)) * w(n);
    bool quadrature = mu.kind() == MeasureSpec::Kind::Density;
    return {std::pow(s, 1.0 / p), 0.0, 0, quadrature ? "quadrature" : "exact", 0, false};
}

NormEstimate even_bp_norm(const DirichletPolynomial& f, int p,
                          std::uint64_t coefficient_budget) {
    const int m = even_half(p);
    DirichletPolynomial g = power_full(f, m, coefficient_budget);
    auto d = divisor_count_sieve(g.length());
    double s = 0.0;
    for (std::uint32_t n : g.support()) s += std::norm(g.coeff(n)) / (double)d[n - 1];
    return {std::pow(s, 1.0 / p), 0.0, 0, "exact", 0, false};
}

namespace {

constexpr std::uint64_t kBlock = 4096;

struct MomentAcc {
    std::vector<double> sum, sum2;

    void init(std::size_t k) {
        sum.assign(k, 0.0);
        sum2.assign(k, 0.0);
    }
    void combine(const MomentAcc& o) {
        if (sum.empty()) {
            *this = o;
            return;
        }
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += o.sum[i];
            sum2[i] += o.sum2[i];
        }
    }
};

NormEstimate finish_estimate(double mean, double var_mean, double p,
                             const SamplerConfig& cfg) {
    NormEstimate est;
    est.samples = cfg.samples;
    est.method = "monte-carlo";
    est.seed = cfg.seed;
    est.has_seed = true;
    est.value = mean > 0.0 ? std::pow(mean, 1.0 / p) : 0.0;
    const double se_mean = std::sqrt(std::max(0.0, var_mean));
    est.std_error = mean > 0.0 ? est.value * se_mean / (p * mean) : 0.0;
    return est;
}

std::vector<NormEstimate> mc_norms_impl(const DirichletPolynomial& f,
                                        const std::vector<double>& ps,
                                        const SamplerConfig& cfg,
                                        SamplerConfig::Domain domain) {
    for (double p : ps)
        if (!(p >= 1.0)) throw std::invalid_argument("monte-carlo norm: p >= 1 required");
    if (cfg.samples < 1) throw std::invalid_argument("monte-carlo norm: samples >= 1");

    LiftEvaluator eval(f);
    if (cfg.K < eval.required_K())
        throw std::invalid_argument("monte-carlo norm: K does not cover the prime support");

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        MomentAcc acc;
        acc.init(ps.size());
        std::vector<Complex> z(cfg.K), chi;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(cfg.seed, i);
            for (std::uint32_t j = 0; j < cfg.K; ++j)
                z[j] = domain == SamplerConfig::Domain::Torus ? rng.next_unit_circle()
                                                              : rng.next_unit_disk();
            eval.character_values(z, chi);
            const double av = std::abs(eval.value(chi));
            for (std::size_t k = 0; k < ps.size(); ++k) {
                const double y = std::pow(av, ps[k]);
                acc.sum[k] += y;
                acc.sum2[k] += y * y;
            }
        }
        return acc;
    };
    MomentAcc total = parallel_blocks<MomentAcc>(cfg.samples, kBlock, work);

    std::vector<NormEstimate> out;
    const double S = (double)cfg.samples;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const double mean = total.sum[k] / S;
        const double var = std::max(0.0, total.sum2[k] / S - mean * mean);
        out.push_back(finish_estimate(mean, var / S, ps[k], cfg));
    }
    return out;
}

} // namespace

std::vector<NormEstimate> mc_hp_norms(const DirichletPolynomial& f,
                                      const std::vector<double>& ps,
                                      const SamplerConfig& cfg) {
    return mc_norms_impl(f, ps, cfg, SamplerConfig::Domain::Torus);
}

NormEstimate mc_hp_norm(const DirichletPolynomial& f, double p, const SamplerConfig& cfg) {
    return mc_hp_norms(f, {p}, cfg)[0];
}

std::vector<NormEstimate> bp_norms_mc(const DirichletPolynomial& f,
                                      const std::vector<double>& ps,
                                      const SamplerConfig& cfg) {
    return mc_norms_impl(f, ps, cfg, SamplerConfig::Domain::Polydisk);
}

NormEstimate bp_norm_mc(const DirichletPolynomial& f, double p, const SamplerConfig& cfg) {
    return bp_norms_mc(f, {p}, cfg)[0];
}

namespace {

bool is_even_integer(double p) {
    return p >= 2.0 && p == std::floor(p) && ((long long)p) % 2 == 0;
}

// sigma-nodes and per-node coefficient scales n^{-sigma_i} on the support.
struct TranslateGrid {
    MeasureNodes nodes;
    std::vector<std::vector<double>> scale; // [node][support index]

    TranslateGrid(const MeasureSpec& mu, const std::vector<std::uint32_t>& support) {
        nodes = measure_nodes(mu);
        scale.resize(nodes.sigma.size());
        for (std::size_t i = 0; i < nodes.sigma.size(); ++i) {
            scale[i].resize(support.size());
            for (std::size_t k = 0; k < support.size(); ++k)
                scale[i][k] = std::pow((double)support[k], -nodes.sigma[i]);
        }
    }
};

} // namespace

NormEstimate ap_norm(const DirichletPolynomial& f, const MeasureSpec& mu, double p,
                     const SamplerConfig& cfg) {
    if (!(p >= 1.0)) throw std::invalid_argument("ap_norm: p >= 1 required");
    if (p == 2.0) return a2_norm(f, mu);
    if (is_even_integer(p)) return even_ap_norm(f, mu, (int)p);

    LiftEvaluator eval(f);
    if (cfg.K < eval.required_K())
        throw std::invalid_argument("ap_norm: K does not cover the prime support");
    TranslateGrid grid(mu, eval.support());
    const std::size_t n_nodes = grid.nodes.sigma.size();

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        MomentAcc acc;
        acc.init(1);
        std::vector<Complex> z(cfg.K), chi;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(cfg.seed, i);
            for (std::uint32_t j = 0; j < cfg.K; ++j) z[j] = rng.next_unit_circle();
            eval.character_values(z, chi);
            double y = 0.0;
            for (std::size_t q = 0; q < n_nodes; ++q)
                y += grid.nodes.weight[q] *
                     std::pow(std::abs(eval.value_scaled(chi, grid.scale[q])), p);
            acc.sum[0] += y;
            acc.sum2[0] += y * y;
        }
        return acc;
    };
    MomentAcc total = parallel_blocks<MomentAcc>(cfg.samples, kBlock, work);
    const double S = (double)cfg.samples;
    const double mean = total.sum[0] / S;
    const double var = std::max(0.0, total.sum2[0] / S - mean * mean);
    return finish_estimate(mean, var / S, p, cfg);
}

NormEstimate dirichlet_space_norm(const DirichletPolynomial& f, const MeasureSpec& mu,
                                  double p, const SamplerConfig& cfg) {
    NormEstimate d = ap_norm(derivative(f), mu, p, cfg);
    const double c = std::pow(std::abs(f.value_at_infinity()), p);
    NormEstimate out = d;
    const double ap = std::pow(d.value, p);
    out.value = std::pow(c + ap, 1.0 / p);
    if (d.std_error > 0.0 && d.value > 0.0) {
        // dV/dA at A = d.value
        const double dv = std::pow(c + ap, 1.0 / p - 1.0) * std::pow(d.value, p - 1.0);
        out.std_error = dv * d.std_error;
    }
    return out;
}

PairedDiff ap_vs_hp_power_diff(const DirichletPolynomial& f, const MeasureSpec& mu,
                               double p, const SamplerConfig& cfg) {
    LiftEvaluator eval(f);
    if (cfg.K < eval.required_K())
        throw std::invalid_argument("ap_vs_hp_power_diff: K does not cover the prime support");
    TranslateGrid grid(mu, eval.support());
    const std::size_t n_nodes = grid.nodes.sigma.size();

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        MomentAcc acc;
        acc.init(1);
        std::vector<Complex> z(cfg.K), chi;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(cfg.seed, i);
            for (std::uint32_t j = 0; j < cfg.K; ++j) z[j] = rng.next_unit_circle();
            eval.character_values(z, chi);
            double ap_side = 0.0;
            for (std::size_t q = 0; q < n_nodes; ++q)
                ap_side += grid.nodes.weight[q] *
                           std::pow(std::abs(eval.value_scaled(chi, grid.scale[q])), p);
            const double hp_side = std::pow(std::abs(eval.value(chi)), p);
            const double diff = ap_side - hp_side;
            acc.sum[0] += diff;
            acc.sum2[0] += diff * diff;
        }
        return acc;
    };
    MomentAcc total = parallel_blocks<MomentAcc>(cfg.samples, kBlock, work);
    const double S = (double)cfg.samples;
    PairedDiff out;
    out.samples = cfg.samples;
    out.mean = total.sum[0] / S;
    const double var = std::max(0.0, total.sum2[0] / S - out.mean * out.mean);
    out.std_error = std::sqrt(var / S);
    return out;
}

} // namespace dirspace
