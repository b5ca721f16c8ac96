#include "dirspace/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dirspace {

PrimeTable& PrimeTable::instance() {
    static PrimeTable table;
    return table;
}

PrimeTable::PrimeTable() { extend_to(1 << 16); }

void PrimeTable::ensure_limit(std::uint64_t limit) {
    if (limit <= limit_) return;
    std::lock_guard<std::mutex> lock(mutex_);
    if (limit > limit_) extend_to(limit);
}

void PrimeTable::ensure_count(std::size_t count) {
    while (primes_.size() < count) {
        // p_k ~ k (ln k + ln ln k); overshoot a little.
        double k = std::max<double>(count, 6);
        double guess = k * (std::log(k) + std::log(std::log(k))) * 1.2 + 64;
        ensure_limit(std::max<std::uint64_t>((std::uint64_t)guess, limit_ * 2));
    }
}

void PrimeTable::extend_to(std::uint64_t limit) {
    // Segmented sieve over (limit_, limit].
    const std::uint64_t lo_start = std::max<std::uint64_t>(limit_ + 1, 2);
    if (lo_start > limit) return;

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt((double)limit)) + 2;
    // Base primes up to sqrt(limit) by a plain sieve (small).
    std::vector<std::uint8_t> base(root + 1, 1);
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
    }

    const std::uint64_t segment = 1 << 20;
    std::vector<std::uint8_t> mark;
    for (std::uint64_t lo = lo_start; lo <= limit; lo += segment) {
        std::uint64_t hi = std::min(limit, lo + segment - 1);
        mark.assign(hi - lo + 1, 1);
        for (std::uint64_t p : base_primes) {
            if (p * p > hi) break;
            std::uint64_t first = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = first; j <= hi; j += p) mark[j - lo] = 0;
        }
        if (lo == 0) { if (mark.size() > 0) mark[0] = 0; if (mark.size() > 1) mark[1] = 0; }
        if (lo == 1) mark[0] = 0;
        for (std::uint64_t j = lo; j <= hi; ++j)
            if (mark[j - lo]) primes_.push_back(j);
    }
    limit_ = limit;
}

std::size_t PrimeTable::index_of(std::uint64_t p) {
    ensure_limit(p);
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return 0;
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

Exponents factorize(std::uint64_t n) {
    if (n < 1 || n > kFactorizeBound)
        throw std::out_of_range("factorize: n outside supported range");
    Exponents result;
    if (n == 1) return result;

    auto& table = PrimeTable::instance();
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt((double)n)) + 1;
    table.ensure_limit(std::min<std::uint64_t>(root + 16, kFactorizeBound));

    std::uint64_t rest = n;
    for (std::size_t i = 1; i <= table.size(); ++i) {
        std::uint64_t p = table.prime(i);
        if (p * p > rest) break;
        if (rest % p) continue;
        std::uint32_t e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        result.entries.emplace_back(static_cast<std::uint32_t>(i), e);
    }
    if (rest > 1) {
        std::size_t idx = table.index_of(rest);
        result.entries.emplace_back(static_cast<std::uint32_t>(idx), 1u);
    }
    return result;
}

std::uint64_t unfactorize(const Exponents& e) {
    auto& table = PrimeTable::instance();
    std::uint64_t n = 1;
    for (auto [idx, exp] : e.entries) {
        table.ensure_count(idx);
        for (std::uint32_t k = 0; k < exp; ++k) n *= table.prime(idx);
    }
    return n;
}

} // namespace dirspace
