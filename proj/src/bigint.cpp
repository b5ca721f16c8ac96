#include "dirspace/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace dirspace {

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    std::uint64_t m = negative_ ? -(std::uint64_t)v : (std::uint64_t)v;
    while (m) {
        limbs_.push_back(static_cast<std::uint32_t>(m));
        m >>= 32;
    }
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    while (v) {
        r.limbs_.push_back(static_cast<std::uint32_t>(v));
        v >>= 32;
    }
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = (std::int64_t)a[i] - borrow - (i < b.size() ? (std::int64_t)b[i] : 0);
        if (d < 0) {
            d += (std::int64_t)1 << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (negative_ == o.negative_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.negative_ = negative_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.negative_ = negative_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.negative_ = o.negative_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (limbs_.empty() || o.limbs_.empty()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t ai = limbs_[i];
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + ai * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != o.negative_;
    r.trim();
    return r;
}

BigInt BigInt::shifted_left(unsigned bits) const {
    if (limbs_.empty() || bits == 0) {
        BigInt r = *this;
        return r;
    }
    const unsigned words = bits / 32, rem = bits % 32;
    BigInt r;
    r.negative_ = negative_;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = (std::uint64_t)limbs_[i] << rem;
        r.limbs_[i + words] |= static_cast<std::uint32_t>(v);
        r.limbs_[i + words + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(limbs_, o.limbs_);
    return negative_ ? c > 0 : c < 0;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    // repeated division by 1e9
    std::vector<std::uint32_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (negative_) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

double BigInt::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return negative_ ? -v : v;
}

namespace {
std::vector<std::vector<BigInt>> g_pascal; // g_pascal[n][k], k <= n
std::mutex g_pascal_mutex;
} // namespace

const BigInt& binomial_big(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        static const BigInt zero;
        return zero;
    }
    std::lock_guard<std::mutex> lock(g_pascal_mutex);
    if ((int)g_pascal.size() <= n) {
        if (g_pascal.empty()) g_pascal.push_back({BigInt(1)});
        for (int r = (int)g_pascal.size(); r <= n; ++r) {
            std::vector<BigInt> row(r + 1);
            row[0] = BigInt(1);
            row[r] = BigInt(1);
            for (int j = 1; j < r; ++j) row[j] = g_pascal[r - 1][j - 1] + g_pascal[r - 1][j];
            g_pascal.push_back(std::move(row));
        }
    }
    return g_pascal[n][k];
}

double binomial_real(double n, int k) {
    if (k < 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (n - i) / (k - i);
    return r;
}

static Dyadic align(const Dyadic& a, unsigned e) {
    // rewrite a with denominator 2^e, e >= a.exp2
    return Dyadic(a.num.shifted_left(e - a.exp2), e);
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    unsigned e = std::max(exp2, o.exp2);
    return Dyadic(align(*this, e).num + align(o, e).num, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
    unsigned e = std::max(exp2, o.exp2);
    return Dyadic(align(*this, e).num - align(o, e).num, e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return Dyadic(num * o.num, exp2 + o.exp2);
}

bool Dyadic::operator==(const Dyadic& o) const {
    unsigned e = std::max(exp2, o.exp2);
    return align(*this, e).num == align(o, e).num;
}

bool Dyadic::operator<=(const Dyadic& o) const {
    unsigned e = std::max(exp2, o.exp2);
    return align(*this, e).num <= align(o, e).num;
}

double Dyadic::to_double() const { return num.to_double() * std::pow(2.0, -(double)exp2); }

DyadicComplex DyadicComplex::operator+(const DyadicComplex& o) const {
    return {re + o.re, im + o.im};
}

DyadicComplex DyadicComplex::operator-(const DyadicComplex& o) const {
    return {re - o.re, im - o.im};
}

DyadicComplex DyadicComplex::operator*(const DyadicComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

} // namespace dirspace
