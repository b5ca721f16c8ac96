// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dirspace/evaluation.hpp"
#include "dirspace/measure.hpp"
#include "dirspace/multiplicative.hpp"
#include "dirspace/norms.hpp"
#include "dirspace/special.hpp"
#include "dirspace/verification.hpp"

using namespace dirspace;

namespace {

int g_failures = 0;

double now_s() {
    static auto t0 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool pass, const std::string& what, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %2d: %s (%s; %.1f s)\n", pass ? "PASS" : "FAIL", id,
                what.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void criterion_1() {
    const double t0 = now_s();
    bool pass = true;
    for (int n = 0; n <= 40 && pass; ++n) pass = verify_binomial_identity(n, 300).pass;
    const double dt = now_s() - t0;
    report(1, pass && dt < 10.0, "binomial identity, exact, n <= 40, degrees <= 300",
           "runtime " + fmt(dt) + " s < 10 s", dt);
}

void criterion_2() {
    const double t0 = now_s();
    bool pass = true;
    for (int n = 1; n <= 60 && pass; ++n)
        for (int m = 1; m <= 60 && pass; ++m) pass = verify_alternating_sum(n, m).pass;
    const double dt = now_s() - t0;
    report(2, pass && dt < 5.0, "alternating binomial sum, exact, n,m <= 60",
           "runtime " + fmt(dt) + " s < 5 s", dt);
}

void criterion_3() {
    const double t0 = now_s();
    VerificationReport r = dm_consistency(6, 100000, 20);
    report(3, r.pass, "d_m = m-fold convolution of ones (m<=6, n<=1e5), d_m(p^k) exact",
           r.pass ? "exact match" : r.lhs, now_s() - t0);
}

void criterion_4() {
    const double t0 = now_s();
    double worst = 0.0;
    for (double a : {-0.5, 0.0, 1.0, 2.5}) {
        MeasureSpec mu = MeasureSpec::alpha(a);
        for (double x = 2.0; x <= 10000.0; x *= 1.31) {
            const std::uint64_t n = (std::uint64_t)x;
            const double ln = std::log((double)n);
            IntegralResult q =
                integrate(mu, [&](double s) { return std::exp(-2.0 * s * ln); }, 1e-12);
            worst = std::max(worst, std::fabs(q.value - std::pow(1.0 + ln, -1.0 - a)));
        }
    }
    const double dt = now_s() - t0;
    report(4, worst <= 1e-9 && dt < 5.0,
           "Gauss-Laguerre weights match (1+log n)^{-1-alpha} to 1e-9",
           "worst |diff| = " + fmt(worst) + ", runtime " + fmt(dt) + " s < 5 s", dt);
}

void criterion_5() {
    const double t0 = now_s();
    const double gamma2 = gamma_m_constant(2, 20000000);
    const double target = 1.0 / riemann_zeta(2.0);
    const bool euler_ok = std::fabs(gamma2 - target) <= 1e-8;

    // independent oracle: sum d(n)^2 n^{-s} = zeta(s)^4 / zeta(2s) at s = 3
    DirectSum ds = divisor_square_sum_direct(2, 1.5, 1000000);
    const double classical = std::pow(riemann_zeta(3.0), 4.0) / riemann_zeta(6.0);
    const bool oracle_ok =
        classical - ds.value >= -1e-8 && classical - ds.value <= 2.0 * ds.tail_estimate + 1e-8;

    const double S = divisor_square_dirichlet_sum(2, 2.0 * 0.505);
    const double ratio = S * std::pow(0.01, 4.0) / gamma2;
    const bool ratio_ok = ratio >= 0.9 && ratio <= 1.1;

    report(5, euler_ok && oracle_ok && ratio_ok, "gamma_2 = 6/pi^2 and near-critical ratio",
           "|gamma2 - 1/zeta(2)| = " + fmt(std::fabs(gamma2 - target)) +
               ", S(0.505)(2s-1)^4/gamma2 = " + fmt(ratio),
           now_s() - t0);
}

void criterion_6() {
    const double t0 = now_s();
    std::vector<double> sigmas;
    for (int i = 0; i < 8; ++i)
        sigmas.push_back(0.5 * (1.0 + 0.004 * std::pow(0.06 / 0.004, i / 7.0)));
    VerificationReport r1 = injection_blowup(1, sigmas, 0.10);
    VerificationReport r2 = injection_blowup(2, sigmas, 0.10);
    const double dt = now_s() - t0;
    std::string detail = "m=1 slope " + fmt(std::stod(r1.lhs)) + " vs -1/4, m=2 slope " +
                         fmt(std::stod(r2.lhs)) + " vs -2/3, runtime " + fmt(dt) + " s < 60 s";
    report(6, r1.pass && r2.pass && dt < 60.0, "blow-up exponents m^2/(2(m+1)) within 10%",
           detail, dt);
}

void criterion_7() {
    const double t0 = now_s();
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 2; n <= 1000; ++n) ns.push_back(n);
    VerificationReport r0 = lp_weight_identity(MeasureSpec::alpha(0.0), ns, 1e-8);
    VerificationReport r1 = lp_weight_identity(MeasureSpec::alpha(1.0), ns, 1e-8);
    VerificationReport rb = lp_b2_identity({2, 3, 5, 10, 100, 999, 1000}, 1e-10);
    report(7, r0.pass && r1.pass && rb.pass,
           "Littlewood-Paley weight identities to 1e-8 / 1e-10",
           "worst gaps " + r0.lhs + ", " + r1.lhs + ", " + rb.lhs, now_s() - t0);
}

void criterion_8() {
    const double t0 = now_s();
    bool pass = true;
    std::string detail;
    for (double a : {0.0, 1.0}) {
        VerificationReport r = a2_sharpness(a, 0.5005, 0.95, 1.05);
        pass = pass && r.pass;
        detail += (a == 0.0 ? "alpha=0 ratio " : ", alpha=1 ratio ") + r.lhs;
    }
    report(8, pass, "A^2 evaluation sharpness: ratio to Gamma(2+alpha)/(2s-1)^{2+alpha}",
           detail, now_s() - t0);
}

void criterion_9() {
    const double t0 = now_s();
    // kernel witness: sqrt(partial/full) of sum d(n) n^{-2 sigma} vs zeta(2 sigma)^2
    auto d = divisor_count_sieve(10000000);
    bool witness_ok = true;
    std::string detail;
    for (double sigma : {0.6, 1.0}) {
        double partial = 0.0;
        for (std::uint32_t n = 1; n <= 10000000; ++n)
            partial += (double)d[n - 1] * std::pow((double)n, -2.0 * sigma);
        const double frac = std::sqrt(partial) / riemann_zeta(2.0 * sigma);
        witness_ok = witness_ok && frac >= 0.9;
        detail += "witness(" + fmt(sigma) + ") = " + fmt(frac) + " ";
    }
    d.clear();
    d.shrink_to_fit();

    // random polynomials never beat the bound beyond 2 std errors at 1e5 samples
    int violations = 0;
    for (int t = 0; t < 20; ++t) {
        DirichletPolynomial f = random_polynomial(90210, t, 5, 24);
        SamplerConfig cfg;
        cfg.K = LiftEvaluator(f).required_K();
        cfg.samples = 100000;
        cfg.seed = 777 + t;
        cfg.domain = SamplerConfig::Domain::Polydisk;
        NormEstimate nb = bp_norm_mc(f, 2.0, cfg);
        for (double sigma : {0.6, 1.0}) {
            const double bound = eval_norm_bp(sigma, 2.0).value;
            if (std::abs(evaluate(f, sigma)) > bound * (nb.value + 2.0 * nb.std_error))
                ++violations;
        }
    }
    detail += ", MC violations " + std::to_string(violations) + "/40";
    report(9, witness_ok && violations == 0,
           "B^p evaluation: kernel witness >= 90%, MC respects the bound", detail,
           now_s() - t0);
}

void criterion_10() {
    const double t0 = now_s();
    DirichletPolynomial g(2);
    g.set_coeff(1, 1.0);
    g.set_coeff(2, 0.5);
    SamplerConfig cfg;
    cfg.K = 1;
    cfg.samples = 1000000;
    cfg.seed = 7;
    NormEstimate est = mc_hp_norm(g, 3.0, cfg);
    const int M = 8192;
    double mean3 = 0.0;
    for (int j = 0; j < M; ++j) {
        const double t = 2.0 * M_PI * j / M;
        mean3 += std::pow(std::abs(Complex(1.0 + 0.5 * std::cos(t), 0.5 * std::sin(t))), 3.0);
    }
    const double oracle = std::pow(mean3 / M, 1.0 / 3.0);
    const bool hp_ok = std::fabs(est.value - oracle) <= 3.0 * est.std_error &&
                       est.std_error / est.value < 0.01;

    int bad = 0;
    double worst_dev = 0.0;
    for (int t = 0; t < 50; ++t) {
        DirichletPolynomial f = random_polynomial(5150, t, 8, 30);
        SamplerConfig c;
        c.K = LiftEvaluator(f).required_K();
        c.samples = 20000;
        c.seed = 4000 + t;
        c.domain = SamplerConfig::Domain::Polydisk;
        NormEstimate nb = bp_norm_mc(f, 2.0, c);
        const double dev = std::fabs(nb.value - b2_norm(f).value) / nb.std_error;
        worst_dev = std::max(worst_dev, dev);
        if (dev > 3.0) ++bad;
    }
    report(10, hp_ok && bad == 0, "Monte Carlo estimators match exact oracles",
           "hp dev " + fmt(std::fabs(est.value - oracle) / est.std_error) + " se, rel se " +
               fmt(est.std_error / est.value) + "; bp worst dev " + fmt(worst_dev) + " se",
           now_s() - t0);
}

void criterion_11() {
    const double t0 = now_s();
    VerificationReport b4 = b4_contraction(1000, 112358, 200);
    bool mc_ok = true;
    std::string detail = "B4<=H2 " + std::string(b4.pass ? "exact pass" : "FAIL");
    SamplerConfig cfg;
    cfg.samples = 4000;
    cfg.seed = 314159;
    for (double p : {1.0, 1.5, 2.0}) {
        VerificationReport ca = hp_ap_contraction(MeasureSpec::alpha(0.0), p, 100, cfg);
        VerificationReport cb = hp_b2p_embedding(p, 100, cfg);
        mc_ok = mc_ok && ca.pass && cb.pass;
    }
    detail += mc_ok ? ", A^p & B^2p contractions 0 failures" : ", contraction failures";
    report(11, b4.pass && mc_ok, "contractions: B^4 in H^2 exact, A^p and B^2p within 2 se",
           detail, now_s() - t0);
}

void criterion_12() {
    const double t0 = now_s();
    VerificationReport r = multiplier_constants();
    std::string c2;
    for (auto& [k, v] : r.parameters)
        if (k == "b1_quadratic_coefficient") c2 = v;
    report(12, r.pass, "multiplier constants: r0 = 2/3 exact, B^1 coefficient 1/8, B^2 identity",
           "quadratic coefficient " + c2, now_s() - t0);
}

void criterion_13() {
    const double t0 = now_s();
    SamplerConfig cfg;
    cfg.samples = 3000;
    cfg.seed = 271828;
    MeasureSpec mu0 = MeasureSpec::alpha(0.0);
    bool pass = true;
    for (char space : {'A', 'B'}) {
        for (double p : {1.0, 1.5, 3.0, 4.0})
            pass = pass && coefficient_inequalities(space, p, 200, mu0, cfg).pass;
        pass = pass && coefficient_inequalities(space, 2.0, 200, mu0, cfg).pass; // equality
    }
    report(13, pass, "coefficient inequalities, 200 seeded polynomials, p in {1,1.5,2,3,4}",
           pass ? "all directions hold" : "failures found", now_s() - t0);
}

void criterion_14() {
    const double t0 = now_s();
    SamplerConfig cfg;
    cfg.samples = 2000;
    cfg.seed = 1618;
    bool pass = true;
    // algebraic N_{pm} = N_p^{1/m} for H^p and B^p
    for (const char* space : {"hp", "bp"}) {
        AnnexeReport rep = annexe_compare(space, 0.75, {1.0, 2.0, 4.0, 8.0}, nullptr, cfg);
        pass = pass && rep.all_pass;
    }
    // A^p sandwich without inversion
    MeasureSpec mu0 = MeasureSpec::alpha(0.0);
    for (double sigma : {0.6, 0.75, 1.0}) {
        AnnexeReport rep = annexe_compare("ap", sigma, {2.0, 4.0}, &mu0, cfg);
        pass = pass && rep.all_pass;
    }
    report(14, pass, "Annexe relations: exact powers for H^p/B^p, A^p bounds sandwich",
           pass ? "all checks hold" : "inversion found", now_s() - t0);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    if (g_failures == 0)
        std::puts("acceptance: all 14 criteria passed");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
