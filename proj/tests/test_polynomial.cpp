#include <doctest.h>

#include <cmath>
#include <complex>

#include "dirspace/multiplicative.hpp"
#include "dirspace/polynomial.hpp"
#include "dirspace/rng.hpp"

using namespace dirspace;

namespace {

DirichletPolynomial random_int_poly(CounterRng& rng, std::uint32_t N) {
    DirichletPolynomial f(N);
    for (std::uint32_t n = 1; n <= N; ++n)
        f.set_coeff(n, Complex((double)((std::int64_t)(rng.next_u64() % 9) - 4),
                               (double)((std::int64_t)(rng.next_u64() % 9) - 4)));
    return f;
}

} // namespace

TEST_CASE("evaluate") {
    DirichletPolynomial one(1);
    one.set_coeff(1, 1.0);
    CHECK(evaluate(one, {3.7, -2.0}) == Complex(1.0));

    // truncated zeta at s=2 -> pi^2/6 within the integral tail bound 1/N
    const std::uint32_t N = 1000000;
    DirichletPolynomial zt(N);
    for (std::uint32_t n = 1; n <= N; ++n) zt.set_coeff(n, 1.0);
    CHECK(std::abs(evaluate(zt, 2.0) - M_PI * M_PI / 6.0) < 1.0 / N);

    // 2^{-s} at s = i pi / log 2 equals -1
    DirichletPolynomial e2 = DirichletPolynomial::basis(2);
    Complex v = evaluate(e2, Complex(0.0, M_PI / std::log(2.0)));
    CHECK(std::abs(v - Complex(-1.0)) < 1e-14);
}

TEST_CASE("translate") {
    DirichletPolynomial e2 = DirichletPolynomial::basis(2);
    CHECK(translate(e2, 1.0).coeff(2) == Complex(0.5));

    CounterRng rng(21, 0);
    DirichletPolynomial f = random_int_poly(rng, 40);
    DirichletPolynomial same = translate(f, 0.0);
    for (std::uint32_t n = 1; n <= 40; ++n) CHECK(same.coeff(n) == f.coeff(n));

    // evaluate(translate(f, s), s0) == evaluate(f, s0 + s)
    for (int t = 0; t < 10; ++t) {
        const double sig = 0.3 * (t + 1) / 10.0;
        const Complex s0(0.4, 1.3 * t);
        CHECK(std::abs(evaluate(translate(f, sig), s0) - evaluate(f, s0 + sig)) < 1e-10);
    }
    // translate(translate(f,a),b) = translate(f,a+b)
    DirichletPolynomial g1 = translate(translate(f, 0.3), 0.9);
    DirichletPolynomial g2 = translate(f, 1.2);
    for (std::uint32_t n = 1; n <= 40; ++n)
        CHECK(std::abs(g1.coeff(n) - g2.coeff(n)) <=
              1e-12 * std::max(1.0, std::abs(g2.coeff(n))));

    CHECK_THROWS_AS(translate(f, -0.1), std::domain_error);
}

TEST_CASE("derivative") {
    DirichletPolynomial e2 = DirichletPolynomial::basis(2);
    CHECK(derivative(e2).coeff(2) == Complex(-std::log(2.0)));

    DirichletPolynomial one(1);
    one.set_coeff(1, 1.0);
    CHECK(derivative(one).coeff(1) == Complex(0.0));

    // finite differences
    CounterRng rng(22, 0);
    DirichletPolynomial f = random_int_poly(rng, 30);
    const Complex s(1.1, -0.7);
    const double h = 1e-6;
    const Complex fd = (evaluate(f, s + h) - evaluate(f, s - h)) / (2.0 * h);
    const Complex an = evaluate(derivative(f), s);
    CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
}

TEST_CASE("multiply") {
    DirichletPolynomial f(3);
    f.set_coeff(2, 1.0);
    f.set_coeff(3, 1.0);
    DirichletPolynomial sq = multiply(f, f, 9);
    CHECK(sq.coeff(4) == Complex(1.0));
    CHECK(sq.coeff(6) == Complex(2.0));
    CHECK(sq.coeff(9) == Complex(1.0));
    CHECK(sq.coeff(5) == Complex(0.0));

    DirichletPolynomial one(1);
    one.set_coeff(1, 1.0);
    CounterRng rng(23, 0);
    DirichletPolynomial g = random_int_poly(rng, 25);
    DirichletPolynomial gid = multiply(g, one, 25);
    for (std::uint32_t n = 1; n <= 25; ++n) CHECK(gid.coeff(n) == g.coeff(n));

    // zeta truncation squared picks up d(n) while n stays below the truncation
    DirichletPolynomial zt(20);
    for (std::uint32_t n = 1; n <= 20; ++n) zt.set_coeff(n, 1.0);
    DirichletPolynomial zt2 = multiply(zt, zt, 400);
    CHECK(zt2.coeff(12) == Complex((double)divisor_count(12)));
    CHECK(zt2.coeff(18) == Complex((double)divisor_count(18)));

    CHECK_THROWS_AS(multiply(g, g, 25 * 25 + 1), std::invalid_argument);

    // commutative / associative with full output length (exact on integers)
    DirichletPolynomial a = random_int_poly(rng, 8), b = random_int_poly(rng, 7),
                        c = random_int_poly(rng, 5);
    DirichletPolynomial ab = multiply(a, b, 56), ba = multiply(b, a, 56);
    for (std::uint32_t n = 1; n <= 56; ++n) CHECK(ab.coeff(n) == ba.coeff(n));
    DirichletPolynomial l = multiply(multiply(a, b, 56), c, 280);
    DirichletPolynomial r = multiply(a, multiply(b, c, 35), 280);
    for (std::uint32_t n = 1; n <= 280; ++n) CHECK(l.coeff(n) == r.coeff(n));
}

TEST_CASE("bohr lift") {
    DirichletPolynomial e6 = DirichletPolynomial::basis(6);
    MultiPolynomial mp = bohr_lift(e6);
    REQUIRE(mp.terms.size() == 1);
    Exponents z1z2;
    z1z2.entries = {{1, 1}, {2, 1}};
    CHECK(mp.terms.begin()->first == z1z2);

    DirichletPolynomial one(1);
    one.set_coeff(1, 2.5);
    MultiPolynomial mone = bohr_lift(one);
    REQUIRE(mone.terms.size() == 1);
    CHECK(mone.terms.begin()->first.entries.empty());

    // substitution oracle: lift evaluated at chi_j = p_j^{-s} equals f(s)
    CounterRng rng(24, 0);
    DirichletPolynomial f = random_int_poly(rng, 30);
    MultiPolynomial lf = bohr_lift(f);
    auto& table = PrimeTable::instance();
    for (const Complex s : {Complex(0.8, 0.0), Complex(1.2, -2.0)}) {
        std::vector<Complex> coords;
        for (int j = 1; j <= 10; ++j)
            coords.push_back(std::exp(-s * std::log((double)table.prime(j))));
        CHECK(std::abs(evaluate_multi(lf, coords) - evaluate(f, s)) < 1e-12);
    }

    // round trip
    DirichletPolynomial back = bohr_drop(bohr_lift(f));
    for (std::uint32_t n = 1; n <= 30; ++n) CHECK(back.coeff(n) == f.coeff(n));

    // ring morphism on integer polynomials (exact)
    DirichletPolynomial g = random_int_poly(rng, 12), h = random_int_poly(rng, 9);
    MultiPolynomial lhs = bohr_lift(multiply(g, h, 108));
    MultiPolynomial rhs = bohr_lift(g).multiply(bohr_lift(h));
    for (auto& [e, c] : rhs.terms)
        if (c != Complex(0.0)) CHECK(lhs.terms[e] == c);
    for (auto& [e, c] : lhs.terms)
        if (c != Complex(0.0)) CHECK(rhs.terms[e] == c);
}

TEST_CASE("twist") {
    CounterRng rng(25, 0);
    DirichletPolynomial f = random_int_poly(rng, 24);
    const std::uint32_t K = LiftEvaluator(f).required_K();

    Character ones;
    ones.coords.assign(K, Complex(1.0));
    DirichletPolynomial same = twist(f, ones);
    for (std::uint32_t n = 1; n <= 24; ++n) CHECK(same.coeff(n) == f.coeff(n));

    // chi = (p_j^{-it}) twists into the vertical translation by it
    auto& table = PrimeTable::instance();
    const double t0 = 0.83;
    Character vert;
    for (std::uint32_t j = 1; j <= K; ++j)
        vert.coords.push_back(std::exp(Complex(0.0, -t0 * std::log((double)table.prime(j)))));
    DirichletPolynomial ft = twist(f, vert);
    for (const Complex s : {Complex(0.7, 0.0), Complex(1.1, 2.2)})
        CHECK(std::abs(evaluate(ft, s) - evaluate(f, s + Complex(0.0, t0))) < 1e-12);

    DirichletPolynomial e2 = DirichletPolynomial::basis(2);
    Character flip;
    flip.coords = {Complex(-1.0)};
    CHECK(twist(e2, flip).coeff(2) == Complex(-1.0));

    // conjugate twist inverts a unimodular twist
    CounterRng rng2(26, 0);
    Character chi;
    for (std::uint32_t j = 0; j < K; ++j) chi.coords.push_back(rng2.next_unit_circle());
    DirichletPolynomial round = twist(twist(f, chi), chi.conjugate());
    for (std::uint32_t n = 1; n <= 24; ++n)
        CHECK(std::abs(round.coeff(n) - f.coeff(n)) <= 1e-12 * std::max(1.0, std::abs(f.coeff(n))));

    // insufficient character length
    Character shorty;
    shorty.coords = {Complex(1.0)};
    DirichletPolynomial e15 = DirichletPolynomial::basis(15);
    CHECK_THROWS_AS(twist(e15, shorty), std::invalid_argument);
}

TEST_CASE("value at infinity and support") {
    DirichletPolynomial f(10);
    f.set_coeff(1, {2.0, -1.0});
    f.set_coeff(7, 3.0);
    CHECK(f.value_at_infinity() == Complex(2.0, -1.0));
    CHECK(f.support() == std::vector<std::uint32_t>{1, 7});
    CHECK(f.required_prime_count() == 4); // 7 = p_4
}

TEST_CASE("polynomial json") {
    DirichletPolynomial f(3);
    f.set_coeff(2, 1.0);
    f.set_coeff(3, Complex(0.0, -0.5));
    CHECK(to_json(f) == "{\"N\": 3, \"coeffs\": [[2, 1, 0], [3, 0, -0.5]]}");

    DirichletPolynomial g = polynomial_from_json("{\"N\":3,\"coeffs\":[[2,1,0],[3,1,0]]}");
    CHECK(g.length() == 3);
    CHECK(g.coeff(2) == Complex(1.0));
    CHECK(g.coeff(3) == Complex(1.0));

    // 17-significant-digit round trip through text
    DirichletPolynomial h(2);
    h.set_coeff(2, Complex(1.0 / 3.0, -2.0 / 7.0));
    DirichletPolynomial back = polynomial_from_json(to_json(h));
    CHECK(back.coeff(2) == h.coeff(2));

    CHECK_THROWS(polynomial_from_json("{\"coeffs\": []}"));
}

TEST_CASE("lift evaluator consistency") {
    CounterRng rng(27, 0);
    DirichletPolynomial f = random_int_poly(rng, 60);
    LiftEvaluator eval(f);
    std::vector<Complex> z(eval.required_K());
    for (auto& c : z) c = rng.next_unit_circle();
    std::vector<Complex> chi;
    eval.character_values(z, chi);
    // against the explicit multinomial evaluation
    CHECK(std::abs(eval.value(chi) - evaluate_multi(bohr_lift(f), z)) < 1e-12);
}
