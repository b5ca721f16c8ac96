#include <doctest.h>

#include <cstdint>
#include <string>

#include "dirspace/bigint.hpp"
#include "dirspace/rng.hpp"

using namespace dirspace;

TEST_CASE("bigint arithmetic matches 128-bit oracle") {
    CounterRng rng(101, 0);
    for (int t = 0; t < 2000; ++t) {
        const std::int64_t a = (std::int64_t)rng.next_u64() / 1024;
        const std::int64_t b = (std::int64_t)rng.next_u64() / 1024;
        BigInt A(a), B(b);
        CHECK((A + B).to_string() == std::to_string(a + b));
        CHECK((A - B).to_string() == std::to_string(a - b));
        const __int128 prod = (__int128)a * b;
        // render the 128-bit product
        __int128 p = prod < 0 ? -prod : prod;
        std::string digits;
        if (p == 0) digits = "0";
        while (p > 0) {
            digits.insert(digits.begin(), (char)('0' + (int)(p % 10)));
            p /= 10;
        }
        if (prod < 0) digits.insert(digits.begin(), '-');
        CHECK((A * B).to_string() == digits);
        CHECK((A < B) == (a < b));
        CHECK((A == B) == (a == b));
    }
}

TEST_CASE("bigint powers and shifts") {
    BigInt two(2), v(1);
    for (int i = 0; i < 100; ++i) v = v * two;
    CHECK(v.to_string() == "1267650600228229401496703205376"); // 2^100
    CHECK(BigInt(1).shifted_left(100) == v);
    CHECK(BigInt(-3).shifted_left(5).to_string() == "-96");
    CHECK(BigInt(0).shifted_left(31).to_string() == "0");
}

TEST_CASE("binomial table agrees with the multiplicative formula") {
    for (int n = 0; n <= 40; ++n) {
        std::uint64_t row_sum = 0;
        for (int k = 0; k <= n; ++k) {
            std::uint64_t c = 1;
            for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
            CHECK(binomial_big(n, k).to_string() == std::to_string(c));
            row_sum += c;
        }
        CHECK(row_sum == (1ull << n));
    }
    CHECK(binomial_big(5, 9).is_zero());
    CHECK(binomial_big(120, 60).to_string().size() == 35); // ~9.6e34
}

TEST_CASE("dyadic rationals") {
    Dyadic a(BigInt(3), 2);  // 3/4
    Dyadic b(BigInt(-5), 3); // -5/8
    CHECK((a + b).to_double() == 0.125);
    CHECK((a * b).to_double() == -15.0 / 32.0);
    CHECK((a - b).to_double() == 1.375);
    CHECK(b <= a);
    CHECK(Dyadic(BigInt(6), 3) == Dyadic(BigInt(3), 2));

    DyadicComplex z(Dyadic(BigInt(1), 1), Dyadic(BigInt(1), 1)); // (1+i)/2
    DyadicComplex z2 = z * z;                                    // i/2
    CHECK(z2.re.num.is_zero());
    CHECK(z2.im.to_double() == 0.5);
    CHECK(z.abs2().to_double() == 0.5);
}
