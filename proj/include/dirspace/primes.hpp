#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

namespace dirspace {

// Prime factorization as (prime index, exponent) pairs, prime indices 1-based
// (index 1 is 2) and strictly increasing, exponents >= 1.
struct Exponents {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;

    bool operator==(const Exponents& o) const { return entries == o.entries; }
    bool operator<(const Exponents& o) const { return entries < o.entries; }
};

// Shared prime table. Grown by a segmented sieve on demand; reads after
// initialization are lock-free.
class PrimeTable {
public:
    static PrimeTable& instance();

    // Ensure all primes <= limit are present.
    void ensure_limit(std::uint64_t limit);
    // Ensure at least `count` primes are present.
    void ensure_count(std::size_t count);

    // 1-based: prime(1) == 2.
    std::uint64_t prime(std::size_t index) const { return primes_[index - 1]; }
    std::size_t size() const { return primes_.size(); }
    std::uint64_t sieved_limit() const { return limit_; }

    // 1-based index of p, or 0 if p is not prime. Extends the table if needed.
    std::size_t index_of(std::uint64_t p);

    const std::vector<std::uint64_t>& primes() const { return primes_; }

private:
    PrimeTable();
    void extend_to(std::uint64_t limit);

    std::vector<std::uint64_t> primes_;
    std::uint64_t limit_ = 0;
    std::mutex mutex_;
};

inline constexpr std::uint64_t kFactorizeBound = 4000000000000000000ull;

// n = 1 yields the empty product. Throws std::out_of_range outside [1, bound].
Exponents factorize(std::uint64_t n);

// Reassemble prod p_i^{a_i}.
std::uint64_t unfactorize(const Exponents& e);

} // namespace dirspace
