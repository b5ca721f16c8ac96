#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dirspace {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Supports exactly what the exact verification suites need: +, -, *,
// comparison, small shifts and decimal printing. No division.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_u64(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    BigInt shifted_left(unsigned bits) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    std::string to_string() const;
    double to_double() const;

private:
    // |this| < |o| as magnitudes
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros
};

// Binomial coefficients as exact integers; rows are cached up to the largest
// requested n.
const BigInt& binomial_big(int n, int k);

// C(n, k) in double precision via lgamma, for the floating-point paths.
double binomial_real(double n, int k);

// Dyadic rational a / 2^e with exact BigInt numerator. Closed under +, -, *;
// the random-polynomial exact suites never need a general quotient.
struct Dyadic {
    BigInt num;
    unsigned exp2 = 0; // denominator 2^exp2

    Dyadic() = default;
    Dyadic(std::int64_t v) : num(v) {}
    Dyadic(BigInt n, unsigned e) : num(std::move(n)), exp2(e) {}

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    bool operator==(const Dyadic& o) const;
    bool operator<=(const Dyadic& o) const;
    double to_double() const;
};

// Complex dyadic rational, the coefficient type of the exact polynomial suites.
struct DyadicComplex {
    Dyadic re, im;

    DyadicComplex() = default;
    DyadicComplex(std::int64_t r) : re(r) {}
    DyadicComplex(Dyadic r, Dyadic i) : re(std::move(r)), im(std::move(i)) {}

    DyadicComplex operator+(const DyadicComplex& o) const;
    DyadicComplex operator-(const DyadicComplex& o) const;
    DyadicComplex operator*(const DyadicComplex& o) const;
    DyadicComplex& operator+=(const DyadicComplex& o) { *this = *this + o; return *this; }
    bool operator==(const DyadicComplex& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re.num.is_zero() && im.num.is_zero(); }
    Dyadic abs2() const { return re * re + im * im; }
};

} // namespace dirspace
