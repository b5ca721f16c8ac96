#include <doctest.h>

#include <cmath>

#include "dirspace/bigint.hpp"
#include "dirspace/multiplicative.hpp"
#include "dirspace/norms.hpp"
#include "dirspace/special.hpp"
#include "dirspace/verification.hpp"

using namespace dirspace;

TEST_CASE("binomial identity") {
    // n=1: series is (1+z)/(1-z)^3 = sum (k+1)^2 z^k; multiply back
    VerificationReport r1 = verify_binomial_identity(1, 40);
    CHECK(r1.pass);
    CHECK(r1.tolerance == 0.0);

    // the series itself: coefficients C(1+k,1)^2 = (k+1)^2
    for (int k = 0; k <= 10; ++k)
        CHECK(binomial_big(1 + k, 1).to_string() == std::to_string(k + 1));

    CHECK(verify_binomial_identity(0, 30).pass); // geometric series
    CHECK(verify_binomial_identity(7, 100).pass);
    CHECK(verify_binomial_identity(40, 300).pass);
}

TEST_CASE("alternating sum identity") {
    // (n, m) = (1, 1): 1*2^2 - 3*1^2 = 1 = C(1,1)^2 by hand
    VerificationReport r = verify_alternating_sum(1, 1);
    CHECK(r.pass);
    CHECK(r.lhs == "1");
    CHECK(r.rhs == "1");

    // m > n: the right side vanishes
    VerificationReport r2 = verify_alternating_sum(3, 9);
    CHECK(r2.pass);
    CHECK(r2.rhs == "0");

    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= 12; ++m) CHECK(verify_alternating_sum(n, m).pass);
}

TEST_CASE("divisor square sums, both routes") {
    // m=1: S = zeta(2 sigma), gamma_1 = 1
    CHECK(divisor_square_dirichlet_sum(1, 2.4) ==
          doctest::Approx(riemann_zeta(2.4)).epsilon(1e-10));
    CHECK(gamma_m_constant(1, 100000) == doctest::Approx(1.0).epsilon(1e-12));

    // m=2: S(sigma) = zeta(2s)^4/zeta(4s) classically
    for (double sigma : {0.75, 1.0}) {
        const double classical =
            std::pow(riemann_zeta(2.0 * sigma), 4.0) / riemann_zeta(4.0 * sigma);
        CHECK(divisor_square_dirichlet_sum(2, 2.0 * sigma) ==
              doctest::Approx(classical).epsilon(1e-8));
    }

    // direct sieve route agrees within its own tail estimate
    DirectSum ds = divisor_square_sum_direct(2, 1.0, 200000);
    const double truth = std::pow(riemann_zeta(2.0), 4.0) / riemann_zeta(4.0);
    CHECK(truth - ds.value >= -1e-9);
    CHECK(truth - ds.value <= 3.0 * ds.tail_estimate + 1e-9);

    VerificationReport rep = divisor_asymptotic(2, {1.0, 0.75, 0.505}, 0.9, 1.1);
    CHECK(rep.pass);
}

TEST_CASE("zeta power h2 asymptotics") {
    std::vector<double> sigmas;
    for (int i = 0; i < 8; ++i)
        sigmas.push_back(0.5 * (1.0 + 0.002 * std::pow(30.0, i / 7.0)));
    CHECK(zeta_power_h2(1, sigmas, 0.02).pass);
    CHECK(zeta_power_h2(2, sigmas, 0.05).pass);

    // value at sigma = 1, m = 1 is zeta(2)^{1/2}
    CHECK(std::sqrt(divisor_square_dirichlet_sum(1, 2.0)) ==
          doctest::Approx(std::sqrt(riemann_zeta(2.0))).epsilon(1e-12));
}

TEST_CASE("injection blow-up") {
    std::vector<double> sigmas;
    for (int i = 0; i < 8; ++i)
        sigmas.push_back(0.5 * (1.0 + 0.004 * std::pow(15.0, i / 7.0)));
    VerificationReport r1 = injection_blowup(1, sigmas, 0.10);
    CHECK(r1.pass);
    VerificationReport r2 = injection_blowup(2, sigmas, 0.10);
    CHECK(r2.pass);
}

TEST_CASE("littlewood-paley identities") {
    CHECK(lp_weight_identity(MeasureSpec::alpha(0.0), {2, 3, 10, 500, 1000}, 1e-8).pass);
    CHECK(lp_weight_identity(MeasureSpec::alpha(1.0), {2, 7, 999}, 1e-8).pass);

    // n = 2 by hand: both sides equal 1/(1 + log 2)
    {
        MeasureSpec mu0 = MeasureSpec::alpha(0.0);
        const double ln2 = std::log(2.0);
        IntegralResult integ = adaptive_integrate(
            [&](double s) { return std::exp(-2.0 * s * ln2) * beta_h(mu0, s); }, 0.0, 30.0,
            1e-12);
        CHECK(4.0 * ln2 * ln2 * integ.value ==
              doctest::Approx(1.0 / (1.0 + ln2)).epsilon(1e-10));
    }

    CHECK(lp_b2_identity({2, 3, 7, 100, 1000}, 1e-10).pass);
    // continuous check at x = e^2: integral = 1/16
    {
        const double ln = 2.0; // log n for n = e^2
        IntegralResult integ = adaptive_integrate(
            [&](double s) { return s * std::exp(-2.0 * s * ln); }, 0.0, 20.0, 1e-13);
        CHECK(integ.value == doctest::Approx(1.0 / 16.0).epsilon(1e-11));
    }
    CHECK_THROWS_AS(lp_weight_identity(MeasureSpec::alpha(0.0), {1}, 1e-8), std::domain_error);
}

TEST_CASE("multiplier constants") {
    VerificationReport r = multiplier_constants();
    CHECK(r.pass);
    bool saw_r0 = false;
    for (auto& [k, v] : r.parameters) {
        if (k == "r0_exact") {
            saw_r0 = true;
            CHECK(v == "2/3");
        }
        if (k == "b1_quadratic_coefficient")
            CHECK(std::fabs(std::stod(v) - 0.125) <= 0.00375);
        if (k == "b2_norm_identity_max_err") CHECK(std::stod(v) <= 1e-12);
    }
    CHECK(saw_r0);
}

TEST_CASE("b4 contraction") {
    // hand example f = 1 + 2^{-s}: ||f^2||_{B^2}^2 = 10/3 <= ||f||_{H^2}^4 = 4
    DirichletPolynomial f(2);
    f.set_coeff(1, 1.0);
    f.set_coeff(2, 1.0);
    DirichletPolynomial f2 = multiply(f, f, 4);
    const double lhs = std::norm(f2.coeff(1)) / 1.0 + std::norm(f2.coeff(2)) / 2.0 +
                       std::norm(f2.coeff(4)) / 3.0;
    CHECK(lhs == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
    CHECK(lhs <= std::pow(h2_norm(f).value, 4.0));

    // e_p: lhs 1/d(p^2) = 1/3 <= 1
    DirichletPolynomial ep = DirichletPolynomial::basis(3);
    DirichletPolynomial ep2 = multiply(ep, ep, 9);
    CHECK(std::norm(ep2.coeff(9)) / (double)divisor_count(9) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    VerificationReport r = b4_contraction(200, 2024, 200);
    CHECK(r.pass);
    CHECK(r.tolerance == 0.0);
}

TEST_CASE("basis separation") {
    SamplerConfig cfg;
    cfg.samples = 30000;
    cfg.seed = 14;
    // p=2 exact: ||e_2 - e_3||_{B^2} = 1 >= 1/sqrt(2)
    DirichletPolynomial f(3);
    f.set_coeff(2, 1.0);
    f.set_coeff(3, -1.0);
    CHECK(b2_norm(f).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(1.0 >= std::pow(2.0 / 4.0, 0.5));

    CHECK(basis_separation(2.0, {{1, 2}, {2, 5}}, cfg).pass);
    CHECK(basis_separation(4.0, {{1, 2}, {3, 4}}, cfg).pass); // threshold 3^{-1/4}
    CHECK(std::pow(2.0 / 6.0, 0.25) == doctest::Approx(std::pow(3.0, -0.25)).epsilon(1e-15));
}

TEST_CASE("t_epsilon experiment") {
    SamplerConfig cfg;
    cfg.samples = 600;
    cfg.seed = 15;
    VerificationReport r =
        t_epsilon_experiment(MeasureSpec::alpha(0.0), {0.5, 1.0, 2.0}, 16, cfg);
    CHECK(r.pass);
}

TEST_CASE("coefficient inequalities") {
    SamplerConfig cfg;
    cfg.samples = 2500;
    cfg.seed = 16;
    MeasureSpec mu0 = MeasureSpec::alpha(0.0);
    for (char space : {'A', 'B'}) {
        CHECK(coefficient_inequalities(space, 2.0, 50, mu0, cfg).pass); // equality
        CHECK(coefficient_inequalities(space, 1.0, 25, mu0, cfg).pass);
        CHECK(coefficient_inequalities(space, 4.0, 25, mu0, cfg).pass);
    }
    CHECK(coefficient_inequalities('B', 1.5, 20, mu0, cfg).pass);
}

TEST_CASE("diagonal decay surrogate") {
    VerificationReport r = diagonal_decay_report();
    CHECK(r.pass);
    bool flagged = false;
    for (auto& [k, v] : r.parameters) flagged = flagged || (k == "surrogate" && v == "true");
    CHECK(flagged);
}

TEST_CASE("dm consistency") {
    VerificationReport r = dm_consistency(4, 20000, 12);
    CHECK(r.pass);
}

TEST_CASE("embedding reports") {
    SamplerConfig cfg;
    cfg.samples = 3000;
    cfg.seed = 17;
    CHECK(hp_ap_contraction(MeasureSpec::alpha(0.0), 1.5, 20, cfg).pass);
    CHECK(hp_b2p_embedding(1.5, 20, cfg).pass);
    CHECK(a2_sharpness(0.0, 0.5005, 0.95, 1.05).pass);
}

TEST_CASE("report json is canonical and deterministic") {
    VerificationReport a = verify_alternating_sum(4, 2);
    VerificationReport b = verify_alternating_sum(4, 2);
    // runtime may differ; canonical JSON must not
    a.runtime_ms = 1;
    b.runtime_ms = 999;
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_json().find("runtime") == std::string::npos);
    CHECK(a.to_json().find("\"status\": \"pass\"") != std::string::npos);

    // suite-level determinism, bytes included
    const std::string j1 = reports_to_json(run_suite("multipliers", "{}"));
    const std::string j2 = reports_to_json(run_suite("multipliers", "{}"));
    CHECK(j1 == j2);
}

TEST_CASE("random polynomial model") {
    DirichletPolynomial f = random_polynomial(5, 9, 10, 20);
    CHECK(f.length() >= 10);
    CHECK(f.length() <= 20);
    CHECK(h2_norm(f).value == doctest::Approx(1.0).epsilon(1e-12));
    DirichletPolynomial g = random_polynomial(5, 9, 10, 20);
    for (std::uint32_t n = 1; n <= f.length(); ++n) CHECK(f.coeff(n) == g.coeff(n));
}

TEST_CASE("unknown suite") {
    CHECK_THROWS_AS(run_suite("nope", "{}"), std::invalid_argument);
    CHECK(suite_names().size() == 6);
}
