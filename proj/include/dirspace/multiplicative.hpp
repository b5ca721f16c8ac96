#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dirspace/primes.hpp"

namespace dirspace {

// d(n) = number of divisors.
std::uint64_t divisor_count(std::uint64_t n);

// d_m(n) = number of ordered factorizations of n into m factors;
// multiplicative with d_m(p^k) = C(m+k-1, m-1). d_1 == 1, d_2 == d.
std::uint64_t generalized_divisor(std::uint32_t m, std::uint64_t n);

// Dense Dirichlet convolution on [1, N]: r(n) = sum_{d|n} a(d) b(n/d).
// Sequences are 1-based in slot n-1. Throws on length mismatch.
template <class T>
std::vector<T> dirichlet_convolve(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dirichlet_convolve: length mismatch");
    const std::size_t n = a.size();
    std::vector<T> r(n, T(0));
    for (std::size_t d = 1; d <= n; ++d) {
        if (a[d - 1] == T(0)) continue;
        for (std::size_t m = 1; d * m <= n; ++m) {
            if (b[m - 1] == T(0)) continue;
            r[d * m - 1] += a[d - 1] * b[m - 1];
        }
    }
    return r;
}

// Coefficients of zeta^q up to N: multiplicative, value C(q+k-1, k) at p^k.
// Exact (integer arithmetic in double) when q is a positive integer.
std::vector<double> zeta_power_coeffs(double q, std::uint32_t N);

// Sieve tables on [1, N].
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t N);
std::vector<std::uint64_t> divisor_count_sieve(std::uint32_t N);
std::vector<std::uint64_t> generalized_divisor_sieve(std::uint32_t m, std::uint32_t N);

struct EulerProduct {
    double value = 1.0;
    // |log of the partial product over the last 10% of primes used|; a
    // truncation indicator, reported rather than folded into the value.
    double truncation_estimate = 0.0;
    std::size_t primes_used = 0;
};

// prod_{p <= P_max} local_factor(p). Throws std::domain_error on a
// non-positive factor.
EulerProduct euler_product(const std::function<double(std::uint64_t)>& local_factor,
                           std::uint64_t P_max);

} // namespace dirspace
