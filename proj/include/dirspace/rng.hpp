#pragma once

#include <cstdint>
#include <cmath>
#include <complex>

namespace dirspace {

// Counter-based generator: the n-th draw of stream s under seed k is a pure
// function of (k, s, n). Streams can be consumed in any order or in parallel
// and the produced values do not change.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() { return block(seed_, stream_, counter_++); }

    // Uniform in [0, 1), 53 usable bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1], safe as a log() argument.
    double next_double_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::complex<double> next_unit_circle() {
        const double theta = 2.0 * M_PI * next_double();
        return {std::cos(theta), std::sin(theta)};
    }

    // Area-uniform on the open unit disk.
    std::complex<double> next_unit_disk() {
        const double r = std::sqrt(next_double());
        const double theta = 2.0 * M_PI * next_double();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    // Standard complex Gaussian, E|z|^2 = 1.
    std::complex<double> next_complex_gaussian() {
        const double u = next_double_pos();
        const double theta = 2.0 * M_PI * next_double();
        const double r = std::sqrt(-std::log(u));
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    static std::uint64_t block(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t counter) {
        return mix(counter ^ mix(stream ^ mix(seed ^ 0x6A09E667F3BCC909ull)));
    }

private:
    // Stafford's mix13 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace dirspace
