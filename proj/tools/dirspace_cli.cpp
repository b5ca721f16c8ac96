// Command-line front end: norm computation, evaluation-norm scans,
// reproducing kernels, and the verification suites.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dirspace/evaluation.hpp"
#include "dirspace/json_out.hpp"
#include "dirspace/measure.hpp"
#include "dirspace/norms.hpp"
#include "dirspace/polynomial.hpp"
#include "dirspace/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using namespace dirspace;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Effective option value: flag > config file > default.
template <class T>
T effective(const CLI::Option* opt, const T& flag_value, const nlohmann::json& file_cfg,
            const std::string& key, const T& fallback) {
    if (opt && opt->count() > 0) return flag_value;
    if (file_cfg.contains(key)) return file_cfg.at(key).get<T>();
    return fallback;
}

MeasureSpec parse_measure(const std::string& text) {
    if (text == "dirac0") return MeasureSpec::dirac_zero();
    if (text.rfind("alpha:", 0) == 0) return MeasureSpec::alpha(std::stod(text.substr(6)));
    return measure_from_config(text); // raw JSON
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(content.c_str(), stdout);
    else
        atomic_write_file(out_path, content);
}

std::uint64_t parse_count(const std::string& s) {
    const double v = std::stod(s);
    if (!(v >= 0) || v > 1e15) throw ConfigError("bad count: " + s);
    return (std::uint64_t)v;
}

struct CommonOpts {
    std::string measure_text = "alpha:0";
    std::string config_path;
    std::string out_path;
    double p = 2.0;
    std::string samples_text = "10000";
    std::uint64_t seed = 1;
    std::uint64_t K = 0;
    std::string domain = "torus";

    CLI::Option* measure_opt = nullptr;
    CLI::Option* p_opt = nullptr;
    CLI::Option* samples_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* K_opt = nullptr;
    CLI::Option* domain_opt = nullptr;

    void attach(CLI::App* cmd) {
        measure_opt = cmd->add_option("--measure", measure_text,
                                      "measure: alpha:<a>, dirac0, or JSON");
        p_opt = cmd->add_option("--p", p, "exponent p >= 1");
        samples_opt = cmd->add_option("--samples", samples_text, "Monte Carlo sample count");
        seed_opt = cmd->add_option("--seed", seed, "Monte Carlo seed");
        K_opt = cmd->add_option("--primes", K, "prime coordinates K");
        domain_opt = cmd->add_option("--domain", domain, "torus | polydisk");
        cmd->add_option("--config", config_path, "JSON config file (flags override)");
        cmd->add_option("--out", out_path, "output path (atomic write)");
    }

    nlohmann::json file_cfg() const {
        if (config_path.empty()) return nlohmann::json::object();
        return nlohmann::json::parse(read_file(config_path));
    }
};

struct ResolvedCommon {
    MeasureSpec mu = MeasureSpec::alpha(0.0);
    double p = 2.0;
    SamplerConfig sampler;
};

ResolvedCommon resolve(const CommonOpts& opts) {
    nlohmann::json cfg = opts.file_cfg();
    ResolvedCommon rc;
    if (opts.measure_opt->count() > 0)
        rc.mu = parse_measure(opts.measure_text);
    else if (cfg.contains("measure"))
        rc.mu = measure_from_config(cfg.at("measure").dump());
    rc.p = effective(opts.p_opt, opts.p, cfg, "p", 2.0);
    if (opts.samples_opt->count() > 0) {
        rc.sampler.samples = parse_count(opts.samples_text);
    } else if (cfg.contains("samples")) {
        const auto& j = cfg.at("samples");
        rc.sampler.samples =
            j.is_string() ? parse_count(j.get<std::string>()) : j.get<std::uint64_t>();
    } else {
        rc.sampler.samples = 10000;
    }
    rc.sampler.seed = effective(opts.seed_opt, opts.seed, cfg, "seed", (std::uint64_t)1);
    rc.sampler.K = (std::uint32_t)effective(opts.K_opt, opts.K, cfg, "primes", (std::uint64_t)0);
    const std::string dom = effective(opts.domain_opt, opts.domain, cfg, "domain",
                                      std::string("torus"));
    if (dom == "torus")
        rc.sampler.domain = SamplerConfig::Domain::Torus;
    else if (dom == "polydisk")
        rc.sampler.domain = SamplerConfig::Domain::Polydisk;
    else
        throw ConfigError("unknown domain: " + dom);
    return rc;
}

std::string sampler_config_json(const ResolvedCommon& rc, const std::string& space) {
    return "{\"space\": \"" + space + "\", \"p\": " + format_double(rc.p) +
           ", \"measure\": " + measure_to_config(rc.mu) +
           ", \"samples\": " + std::to_string(rc.sampler.samples) +
           ", \"seed\": " + std::to_string(rc.sampler.seed) +
           ", \"primes\": " + std::to_string(rc.sampler.K) + ", \"domain\": \"" +
           (rc.sampler.domain == SamplerConfig::Domain::Torus ? "torus" : "polydisk") + "\"}";
}

int cmd_norm(const CommonOpts& opts, const std::string& space, const std::string& poly_text,
             const std::string& poly_file) {
    ResolvedCommon rc = resolve(opts);
    std::string text = poly_text;
    if (!poly_file.empty()) text = read_file(poly_file);
    if (text.empty()) throw ConfigError("norm: supply --poly or --poly-file");
    DirichletPolynomial f = polynomial_from_json(text);
    if (rc.sampler.K == 0) rc.sampler.K = LiftEvaluator(f).required_K();

    NormEstimate est;
    if (space == "h2")
        est = h2_norm(f);
    else if (space == "a2")
        est = a2_norm(f, rc.mu);
    else if (space == "b2")
        est = b2_norm(f);
    else if (space == "hp")
        est = mc_hp_norm(f, rc.p, rc.sampler);
    else if (space == "ap")
        est = ap_norm(f, rc.mu, rc.p, rc.sampler);
    else if (space == "bp") {
        rc.sampler.domain = SamplerConfig::Domain::Polydisk;
        est = bp_norm_mc(f, rc.p, rc.sampler);
    } else if (space == "dp")
        est = dirichlet_space_norm(f, rc.mu, rc.p, rc.sampler);
    else
        throw ConfigError("norm: unknown space " + space);

    std::string out = "{\"norm\": " + est.to_json() +
                      ", \"config\": " + sampler_config_json(rc, space) + "}\n";
    emit(out, opts.out_path);
    return kExitOk;
}

EvalBound eval_dispatch(const std::string& space, const ResolvedCommon& rc, double sigma) {
    const std::complex<double> s(sigma, 0.0);
    if (space == "hp") return eval_norm_hp(s, rc.p);
    if (space == "bp") return eval_norm_bp(s, rc.p);
    if (space == "a2") return eval_norm_a2(rc.mu, s);
    if (space == "ap") {
        if (rc.p >= 2.0 && rc.p == std::floor(rc.p) && ((long long)rc.p) % 2 == 0)
            return eval_bound_ap_even(rc.mu, s, (int)rc.p);
        return eval_bound_ap_general(rc.mu, s, rc.p, default_eta_grid(sigma - 0.5));
    }
    if (space == "dp") return eval_bound_dp(rc.mu, s, rc.p);
    if (space == "disk") {
        // sigma is |z| here; constant weight
        return disk_eval_bound([](double) { return 1.0; }, sigma, rc.p,
                               default_eta_grid(1.0 - sigma));
    }
    throw ConfigError("eval-norm: unknown space " + space);
}

int cmd_eval_norm(const CommonOpts& opts, const std::string& space, double sigma) {
    ResolvedCommon rc = resolve(opts);
    EvalBound b = eval_dispatch(space, rc, sigma);
    std::string out = "{\"eval\": " + b.to_json() +
                      ", \"config\": " + sampler_config_json(rc, space) + "}\n";
    emit(out, opts.out_path);
    return kExitOk;
}

int cmd_eval_scan(const CommonOpts& opts, const std::string& space, double lo, double hi,
                  int points) {
    ResolvedCommon rc = resolve(opts);
    if (points < 2) throw ConfigError("eval-scan: at least 2 points");
    if (space != "disk" && !(lo > 0.5)) throw ConfigError("eval-scan: sigma must exceed 1/2");
    std::string csv = "sigma,value,kind,space,p\n";
    for (int i = 0; i < points; ++i) {
        const double sigma = lo + (hi - lo) * i / (points - 1);
        EvalBound b = eval_dispatch(space, rc, sigma);
        csv += format_double(sigma) + "," + format_double(b.value) + "," +
               eval_kind_name(b.kind) + "," + space + "," + format_double(rc.p) + "\n";
    }
    emit(csv, opts.out_path);
    return kExitOk;
}

int cmd_kernel(const CommonOpts& opts, double s_re, double w_re, std::uint64_t N) {
    ResolvedCommon rc = resolve(opts);
    KernelValue k = kernel_a2(rc.mu, s_re, w_re, N);
    std::string out = "{\"kernel\": {\"re\": " + format_double(k.value.real()) +
                      ", \"im\": " + format_double(k.value.imag()) +
                      ", \"tail_bound\": " + format_double(k.tail_bound) +
                      ", \"N\": " + std::to_string(N) +
                      "}, \"config\": " + sampler_config_json(rc, "a2") + "}\n";
    emit(out, opts.out_path);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& config_path,
               const std::string& json_path) {
    std::string cfg = config_path.empty() ? "{}" : read_file(config_path);
    std::vector<VerificationReport> reports = run_suite(suite, cfg);
    std::fputs(reports_to_table(reports).c_str(), stdout);
    if (!json_path.empty()) atomic_write_file(json_path, reports_to_json(reports));
    for (const auto& r : reports)
        if (!r.pass) return kExitVerifyFail;
    return kExitOk;
}

int cmd_report(const std::string& out_path, const std::string& config_path) {
    std::string cfg = config_path.empty() ? "{}" : read_file(config_path);
    std::string out = "[";
    bool first = true;
    bool all_pass = true;
    for (const std::string& suite : suite_names()) {
        std::vector<VerificationReport> reports = run_suite(suite, cfg);
        for (const auto& r : reports) all_pass = all_pass && r.pass;
        if (!first) out += ",\n ";
        first = false;
        out += "{\"suite\": \"" + suite + "\", \"reports\": " + reports_to_json(reports) + "}";
        std::fprintf(stderr, "suite %s done\n", suite.c_str());
    }
    out += "]\n";
    emit(out, out_path);
    return all_pass ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Norms, kernels and verified identities for Dirichlet series spaces"};
    app.require_subcommand(1);

    // norm
    auto* norm = app.add_subcommand("norm", "compute a space norm of a polynomial");
    CommonOpts norm_opts;
    norm_opts.attach(norm);
    std::string norm_space = "h2", poly_text, poly_file;
    norm->add_option("--space", norm_space, "h2|a2|b2|hp|ap|bp|dp")->required();
    norm->add_option("--poly", poly_text, "polynomial JSON");
    norm->add_option("--poly-file", poly_file, "polynomial JSON file");

    // eval-norm
    auto* ev = app.add_subcommand("eval-norm", "evaluation-norm value or bound");
    CommonOpts ev_opts;
    ev_opts.attach(ev);
    std::string ev_space = "hp";
    double ev_sigma = 1.0;
    ev->add_option("--space", ev_space, "hp|a2|ap|bp|dp|disk")->required();
    ev->add_option("--sigma", ev_sigma, "Re(s) > 1/2 (|z| for disk)")->required();

    // eval-scan
    auto* scan = app.add_subcommand("eval-scan", "CSV scan of evaluation norms");
    CommonOpts scan_opts;
    scan_opts.attach(scan);
    std::string scan_space = "hp";
    double scan_lo = 0.6, scan_hi = 2.0;
    int scan_points = 50;
    scan->add_option("--space", scan_space)->required();
    scan->add_option("--sigma-min", scan_lo)->required();
    scan->add_option("--sigma-max", scan_hi)->required();
    scan->add_option("--points", scan_points);

    // kernel
    auto* ker = app.add_subcommand("kernel", "truncated reproducing kernel of A^2_mu");
    CommonOpts ker_opts;
    ker_opts.attach(ker);
    double ker_s = 1.0, ker_w = 1.0;
    std::uint64_t ker_N = 100000;
    ker->add_option("--s", ker_s)->required();
    ker->add_option("--w", ker_w)->required();
    ker->add_option("--N", ker_N, "truncation length");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite, ver_config, ver_json;
    ver->add_option("--suite", ver_suite,
                    "identities|asymptotics|littlewood-paley|multipliers|embeddings|coefficients")
        ->required();
    ver->add_option("--config", ver_config, "JSON config file");
    ver->add_option("--json", ver_json, "write the report array here");

    // report
    auto* repc = app.add_subcommand("report", "run every suite, one combined JSON");
    std::string rep_out, rep_config;
    repc->add_option("--out", rep_out);
    repc->add_option("--config", rep_config, "JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (norm->parsed()) return cmd_norm(norm_opts, norm_space, poly_text, poly_file);
        if (ev->parsed()) return cmd_eval_norm(ev_opts, ev_space, ev_sigma);
        if (scan->parsed())
            return cmd_eval_scan(scan_opts, scan_space, scan_lo, scan_hi, scan_points);
        if (ker->parsed()) return cmd_kernel(ker_opts, ker_s, ker_w, ker_N);
        if (ver->parsed()) return cmd_verify(ver_suite, ver_config, ver_json);
        if (repc->parsed()) return cmd_report(rep_out, rep_config);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    }
    return kExitConfig;
}
