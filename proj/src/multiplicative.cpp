#include "dirspace/multiplicative.hpp"

#include <cmath>

namespace dirspace {

std::uint64_t divisor_count(std::uint64_t n) {
    Exponents f = factorize(n);
    std::uint64_t d = 1;
    for (auto [idx, e] : f.entries) d *= (e + 1);
    return d;
}

namespace {
std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r*(n-k+i) divisible by i at each step
    }
    return r;
}
} // namespace

std::uint64_t generalized_divisor(std::uint32_t m, std::uint64_t n) {
    if (m < 1) throw std::out_of_range("generalized_divisor: m >= 1 required");
    Exponents f = factorize(n);
    std::uint64_t r = 1;
    for (auto [idx, e] : f.entries) r *= binom_u64(m + e - 1, m - 1);
    return r;
}

std::vector<double> zeta_power_coeffs(double q, std::uint32_t N) {
    if (!(q > 0)) throw std::domain_error("zeta_power_coeffs: q > 0 required");
    if (N < 1) throw std::out_of_range("zeta_power_coeffs: N >= 1 required");
    auto spf = smallest_prime_factor_sieve(N);
    std::vector<double> c(N, 0.0);
    // prime-power values C(q+k-1, k), then spread multiplicatively
    c[0] = 1.0;
    for (std::uint32_t n = 2; n <= N; ++n) {
        std::uint32_t p = spf[n];
        std::uint32_t rest = n, k = 0;
        while (rest % p == 0) { rest /= p; ++k; }
        double pp; // value at p^k
        {
            double r = 1.0;
            for (std::uint32_t i = 0; i < k; ++i) r *= (q + i) / (i + 1);
            pp = r;
        }
        c[n - 1] = c[rest - 1] * pp;
    }
    return c;
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t N) {
    std::vector<std::uint32_t> spf(N + 1, 0);
    for (std::uint32_t i = 2; i <= N; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

std::vector<std::uint64_t> divisor_count_sieve(std::uint32_t N) {
    return generalized_divisor_sieve(2, N);
}

std::vector<std::uint64_t> generalized_divisor_sieve(std::uint32_t m, std::uint32_t N) {
    auto spf = smallest_prime_factor_sieve(N);
    std::vector<std::uint64_t> f(N + 1, 0);
    if (N >= 1) f[1] = 1;
    for (std::uint32_t n = 2; n <= N; ++n) {
        std::uint32_t p = spf[n];
        std::uint32_t rest = n, k = 0;
        while (rest % p == 0) { rest /= p; ++k; }
        f[n] = f[rest] * binom_u64(m + k - 1, m - 1);
    }
    f.erase(f.begin()); // 1-based -> slot n-1
    return f;
}

EulerProduct euler_product(const std::function<double(std::uint64_t)>& local_factor,
                           std::uint64_t P_max) {
    auto& table = PrimeTable::instance();
    table.ensure_limit(P_max);
    const auto& primes = table.primes();

    EulerProduct out;
    std::size_t count = 0;
    while (count < primes.size() && primes[count] <= P_max) ++count;
    out.primes_used = count;

    const std::size_t tail_start = count - count / 10;
    double log_prod = 0.0, log_tail = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        double f = local_factor(primes[i]);
        if (!(f > 0.0)) throw std::domain_error("euler_product: non-positive local factor");
        double lf = std::log(f);
        log_prod += lf;
        if (i >= tail_start) log_tail += lf;
    }
    out.value = std::exp(log_prod);
    out.truncation_estimate = std::fabs(log_tail);
    return out;
}

} // namespace dirspace
