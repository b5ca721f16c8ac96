#include "dirspace/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "dirspace/json_out.hpp"
#include "dirspace/multiplicative.hpp"

#include <json.hpp>

namespace dirspace {

namespace {

// Shared log table, used once polynomials are long enough that evaluation
// sits in an inner loop.
constexpr std::uint32_t kLogCacheThreshold = 10000;
std::vector<double> g_logs; // g_logs[n] = log(n)
std::mutex g_logs_mutex;

const std::vector<double>& log_table(std::uint32_t N) {
    std::lock_guard<std::mutex> lock(g_logs_mutex);
    if (g_logs.size() < N + 1) {
        std::size_t old = g_logs.size();
        g_logs.resize(N + 1);
        if (old == 0) {
            g_logs[0] = 0.0;
            old = 1;
        }
        for (std::size_t n = old; n <= N; ++n) g_logs[n] = std::log((double)n);
    }
    return g_logs;
}

} // namespace

DirichletPolynomial DirichletPolynomial::basis(std::uint32_t n, std::uint32_t N) {
    if (n < 1) throw std::out_of_range("basis: n >= 1 required");
    DirichletPolynomial f(std::max(n, N));
    f.set_coeff(n, Complex(1.0));
    return f;
}

void DirichletPolynomial::set_coeff(std::uint32_t n, Complex v) {
    if (n < 1 || n > length()) throw std::out_of_range("set_coeff: index outside [1, N]");
    coeffs_[n - 1] = v;
}

std::vector<std::uint32_t> DirichletPolynomial::support() const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t n = 1; n <= length(); ++n)
        if (coeffs_[n - 1] != Complex(0.0)) s.push_back(n);
    return s;
}

std::uint32_t DirichletPolynomial::required_prime_count() const {
    std::uint32_t K = 0;
    for (std::uint32_t n : support()) {
        Exponents e = factorize(n);
        if (!e.entries.empty()) K = std::max(K, e.entries.back().first);
    }
    return K;
}

Complex evaluate(const DirichletPolynomial& f, Complex s) {
    const std::uint32_t N = f.length();
    Complex sum = 0.0;
    if (N > kLogCacheThreshold) {
        const auto& logs = log_table(N);
        for (std::uint32_t n = 1; n <= N; ++n) {
            Complex a = f.coeffs()[n - 1];
            if (a == Complex(0.0)) continue;
            sum += a * std::exp(-s * logs[n]);
        }
    } else {
        for (std::uint32_t n = 1; n <= N; ++n) {
            Complex a = f.coeffs()[n - 1];
            if (a == Complex(0.0)) continue;
            sum += a * std::exp(-s * std::log((double)n));
        }
    }
    return sum;
}

DirichletPolynomial translate(const DirichletPolynomial& f, double sigma) {
    if (sigma < 0.0) throw std::domain_error("translate: sigma >= 0 required");
    DirichletPolynomial g(f.length());
    for (std::uint32_t n = 1; n <= f.length(); ++n)
        g.coeffs()[n - 1] = f.coeffs()[n - 1] * std::pow((double)n, -sigma);
    return g;
}

DirichletPolynomial derivative(const DirichletPolynomial& f) {
    DirichletPolynomial g(f.length());
    for (std::uint32_t n = 2; n <= f.length(); ++n)
        g.coeffs()[n - 1] = -f.coeffs()[n - 1] * std::log((double)n);
    return g;
}

DirichletPolynomial multiply(const DirichletPolynomial& f, const DirichletPolynomial& g,
                             std::uint64_t N_out) {
    const std::uint64_t full = (std::uint64_t)f.length() * g.length();
    if (N_out < 1 || N_out > full)
        throw std::invalid_argument("multiply: N_out must lie in [1, N_f*N_g]");
    DirichletPolynomial r((std::uint32_t)N_out);
    for (std::uint32_t d = 1; d <= f.length() && d <= N_out; ++d) {
        Complex a = f.coeffs()[d - 1];
        if (a == Complex(0.0)) continue;
        const std::uint32_t m_max =
            (std::uint32_t)std::min<std::uint64_t>(g.length(), N_out / d);
        for (std::uint32_t m = 1; m <= m_max; ++m) {
            Complex b = g.coeffs()[m - 1];
            if (b == Complex(0.0)) continue;
            r.coeffs()[(std::uint64_t)d * m - 1] += a * b;
        }
    }
    return r;
}

MultiPolynomial bohr_lift(const DirichletPolynomial& f) {
    MultiPolynomial mp;
    for (std::uint32_t n : f.support()) mp.terms[factorize(n)] = f.coeff(n);
    return mp;
}

DirichletPolynomial bohr_drop(const MultiPolynomial& mp) {
    std::uint64_t N = 1;
    for (const auto& [e, c] : mp.terms) N = std::max(N, unfactorize(e));
    DirichletPolynomial f((std::uint32_t)N);
    for (const auto& [e, c] : mp.terms) f.set_coeff((std::uint32_t)unfactorize(e), c);
    return f;
}

MultiPolynomial MultiPolynomial::multiply(const MultiPolynomial& o) const {
    MultiPolynomial r;
    for (const auto& [ea, ca] : terms) {
        for (const auto& [eb, cb] : o.terms) {
            // merge sorted exponent lists
            Exponents e;
            std::size_t i = 0, j = 0;
            while (i < ea.entries.size() || j < eb.entries.size()) {
                if (j >= eb.entries.size() ||
                    (i < ea.entries.size() && ea.entries[i].first < eb.entries[j].first)) {
                    e.entries.push_back(ea.entries[i++]);
                } else if (i >= ea.entries.size() ||
                           eb.entries[j].first < ea.entries[i].first) {
                    e.entries.push_back(eb.entries[j++]);
                } else {
                    e.entries.emplace_back(ea.entries[i].first,
                                           ea.entries[i].second + eb.entries[j].second);
                    ++i;
                    ++j;
                }
            }
            r.terms[e] += ca * cb;
        }
    }
    return r;
}

Character Character::conjugate() const {
    Character c;
    c.coords.reserve(coords.size());
    for (Complex z : coords) c.coords.push_back(std::conj(z));
    return c;
}

DirichletPolynomial twist(const DirichletPolynomial& f, const Character& chi) {
    DirichletPolynomial g(f.length());
    for (std::uint32_t n : f.support()) {
        Exponents e = factorize(n);
        Complex factor = 1.0;
        for (auto [idx, exp] : e.entries) {
            if (idx > chi.K())
                throw std::invalid_argument("twist: character does not cover prime support");
            Complex base = chi.coords[idx - 1];
            for (std::uint32_t k = 0; k < exp; ++k) factor *= base;
        }
        g.set_coeff(n, f.coeff(n) * factor);
    }
    return g;
}

Complex evaluate_multi(const MultiPolynomial& mp, const std::vector<Complex>& coords) {
    Complex sum = 0.0;
    for (const auto& [e, c] : mp.terms) {
        Complex term = c;
        for (auto [idx, exp] : e.entries) {
            if (idx > coords.size())
                throw std::invalid_argument("evaluate_multi: coords do not cover support");
            for (std::uint32_t k = 0; k < exp; ++k) term *= coords[idx - 1];
        }
        sum += term;
    }
    return sum;
}

LiftEvaluator::LiftEvaluator(const DirichletPolynomial& f) {
    N_ = f.length();
    auto spf = smallest_prime_factor_sieve(N_);
    auto& table = PrimeTable::instance();
    table.ensure_limit(N_ + 1);

    parent_.assign(N_ + 1, 1);
    prime_slot_.assign(N_ + 1, 0);
    for (std::uint32_t n = 2; n <= N_; ++n) {
        std::uint32_t p = spf[n];
        parent_[n] = n / p;
        prime_slot_[n] = (std::uint32_t)table.index_of(p) - 1;
    }
    for (std::uint32_t n : f.support()) {
        support_.push_back(n);
        support_coeffs_.push_back(f.coeff(n));
        std::uint32_t m = n;
        while (m > 1) {
            required_K_ = std::max(required_K_, prime_slot_[m] + 1);
            m = parent_[m];
        }
    }
}

void LiftEvaluator::character_values(const std::vector<Complex>& z,
                                     std::vector<Complex>& chi) const {
    if (z.size() < required_K_)
        throw std::invalid_argument("LiftEvaluator: insufficient prime coordinates");
    chi.resize(N_ + 1);
    chi[0] = 0.0;
    chi[1] = 1.0;
    for (std::uint32_t n = 2; n <= N_; ++n)
        chi[n] = chi[parent_[n]] * z[prime_slot_[n]];
}

Complex LiftEvaluator::value(const std::vector<Complex>& chi) const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i)
        sum += support_coeffs_[i] * chi[support_[i]];
    return sum;
}

Complex LiftEvaluator::value_scaled(const std::vector<Complex>& chi,
                                    const std::vector<double>& scale) const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i)
        sum += support_coeffs_[i] * scale[i] * chi[support_[i]];
    return sum;
}

std::string to_json(const DirichletPolynomial& f) {
    std::string out = "{\"N\": " + std::to_string(f.length()) + ", \"coeffs\": [";
    bool first = true;
    for (std::uint32_t n : f.support()) {
        if (!first) out += ", ";
        first = false;
        out += "[" + std::to_string(n) + ", " + format_double(f.coeff(n).real()) + ", " +
               format_double(f.coeff(n).imag()) + "]";
    }
    out += "]}";
    return out;
}

DirichletPolynomial polynomial_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("N") || !j.contains("coeffs"))
        throw std::invalid_argument("polynomial_from_json: need keys N and coeffs");
    std::uint32_t N = j.at("N").get<std::uint32_t>();
    DirichletPolynomial f(N);
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("polynomial_from_json: coeff entries are [n, re, im]");
        std::uint32_t n = entry[0].get<std::uint32_t>();
        f.set_coeff(n, Complex(entry[1].get<double>(), entry[2].get<double>()));
    }
    return f;
}

} // namespace dirspace
