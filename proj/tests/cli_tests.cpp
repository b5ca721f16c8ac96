// End-to-end checks of the command-line front end: exit codes, byte-level
// determinism, scan consistency, atomic output files.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;

#define EXPECT(cond, msg)                                                    \
    do {                                                                     \
        if (!(cond)) {                                                       \
            std::cerr << "[FAIL] " << __LINE__ << ": " << msg << "\n";       \
            ++g_failures;                                                    \
        }                                                                    \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<double> csv_values(const std::string& csv, int column) {
    std::vector<double> vals;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        for (int c = 0; std::getline(ls, cell, ','); ++c)
            if (c == column) vals.push_back(std::stod(cell));
    }
    return vals;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-dirspace-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];

    // exact norms through the CLI
    {
        RunResult r = run(bin + " norm --space h2 --poly '{\"N\":3,\"coeffs\":[[2,1,0],[3,1,0]]}'");
        EXPECT(r.exit_code == 0, "h2 norm exit");
        EXPECT(r.out.find("\"value\": 1.4142135623730951") != std::string::npos, "h2 value sqrt2");
        RunResult b = run(bin + " norm --space b2 --poly '{\"N\":3,\"coeffs\":[[2,1,0],[3,1,0]]}'");
        EXPECT(b.out.find("\"value\": 1,") != std::string::npos, "b2 value 1");
    }

    // byte-identical reruns of a stochastic estimate, including across THREADS
    {
        const std::string cmd = bin +
                                " norm --space hp --p 3 --samples 2e5 --seed 7 --poly "
                                "'{\"N\":2,\"coeffs\":[[1,1,0],[2,0.5,0]]}'";
        RunResult r1 = run(cmd);
        RunResult r2 = run(cmd);
        EXPECT(r1.exit_code == 0, "hp mc exit");
        EXPECT(!r1.out.empty() && r1.out == r2.out, "identical bytes across reruns");
        RunResult r3 = run("THREADS=3 " + cmd);
        EXPECT(r1.out == r3.out, "identical bytes across thread counts");
        RunResult r4 = run(bin +
                           " norm --space hp --p 3 --samples 2e5 --seed 8 --poly "
                           "'{\"N\":2,\"coeffs\":[[1,1,0],[2,0.5,0]]}'");
        EXPECT(r4.out != r1.out, "seed changes the estimate");
    }

    // eval-scan: sigma = 0.5 violates the precondition -> exit 2
    {
        RunResult r = run(bin + " eval-scan --space hp --sigma-min 0.5 --sigma-max 1 --points 5");
        EXPECT(r.exit_code == 2, "scan at sigma=0.5 rejected");
    }

    // bp scan at p=2 equals the hp scan squared
    {
        RunResult h = run(bin + " eval-scan --space hp --p 2 --sigma-min 0.6 --sigma-max 1.4 --points 9");
        RunResult b = run(bin + " eval-scan --space bp --p 2 --sigma-min 0.6 --sigma-max 1.4 --points 9");
        EXPECT(h.exit_code == 0 && b.exit_code == 0, "scans run");
        auto hv = csv_values(h.out, 1), bv = csv_values(b.out, 1);
        EXPECT(hv.size() == 9 && bv.size() == 9, "scan row count");
        for (std::size_t i = 0; i < hv.size(); ++i)
            EXPECT(std::abs(bv[i] - hv[i] * hv[i]) <= 1e-12 * bv[i], "bp = hp^2");
        // decreasing in sigma
        for (std::size_t i = 0; i + 1 < hv.size(); ++i) EXPECT(hv[i] > hv[i + 1], "scan decreasing");
    }

    // a2 scan decreasing over 50 points
    {
        RunResult r = run(bin +
                          " eval-scan --space a2 --measure alpha:0 --sigma-min 0.51 "
                          "--sigma-max 2 --points 50");
        EXPECT(r.exit_code == 0, "a2 scan runs");
        auto v = csv_values(r.out, 1);
        EXPECT(v.size() == 50, "50 rows");
        for (std::size_t i = 0; i + 1 < v.size(); ++i) EXPECT(v[i] > v[i + 1], "a2 decreasing");
    }

    // kernel subcommand
    {
        RunResult r = run(bin + " kernel --measure dirac0 --s 1.0 --w 1.0 --N 1000");
        EXPECT(r.exit_code == 0, "kernel exit");
        EXPECT(r.out.find("\"tail_bound\":") != std::string::npos, "kernel tail reported");
    }

    // config errors
    {
        EXPECT(run(bin + " norm --space nope --poly '{\"N\":1,\"coeffs\":[[1,1,0]]}'").exit_code == 2,
               "unknown space");
        EXPECT(run(bin + " verify --suite nope").exit_code == 2, "unknown suite");
        EXPECT(run(bin + " norm --space h2").exit_code == 2, "missing polynomial");
        EXPECT(run(bin + " eval-norm --space a2 --sigma 0.4").exit_code == 2,
               "sigma below the critical line");
    }

    // verify with a scaled-down config; exit 0 and JSON written atomically
    {
        const std::string cfg_path = "/tmp/dirspace_cli_cfg.json";
        {
            std::ofstream cfg(cfg_path);
            cfg << "{\"binomial_n_max\": 8, \"binomial_K\": 60, \"alternating_n_max\": 10, "
                   "\"alternating_m_max\": 10, \"dm_N\": 20000}";
        }
        const std::string json_path = "/tmp/dirspace_cli_identities.json";
        std::remove(json_path.c_str());
        RunResult r = run(bin + " verify --suite identities --config " + cfg_path + " --json " +
                          json_path);
        EXPECT(r.exit_code == 0, "identities suite passes");
        EXPECT(r.out.find("[PASS]") != std::string::npos, "table printed");
        std::ifstream in(json_path);
        EXPECT(in.good(), "json file exists");
        std::stringstream ss;
        ss << in.rdbuf();
        EXPECT(ss.str().find("\"status\": \"pass\"") != std::string::npos, "json has passes");
        std::ifstream tmp(json_path + ".tmp");
        EXPECT(!tmp.good(), "no temp file left behind");
    }

    // numerical-failure exit code: the D^p tail diverges under the p = 1
    // majorant and is reported, not capped
    {
        RunResult r = run(bin + " eval-norm --space dp --sigma 0.8 --p 1 --measure alpha:0");
        EXPECT(r.exit_code == 3, "divergent dp tail reported as numerical failure");
    }

    // config file provides values, flags override them
    {
        const std::string cfg_path = "/tmp/dirspace_cli_norm_cfg.json";
        {
            std::ofstream cfg(cfg_path);
            cfg << "{\"p\": 3.0, \"samples\": 1000, \"seed\": 5}";
        }
        const std::string poly = " --poly '{\"N\":2,\"coeffs\":[[1,1,0],[2,0.5,0]]}'";
        RunResult from_cfg = run(bin + " norm --space hp --config " + cfg_path + poly);
        EXPECT(from_cfg.out.find("\"p\": 3, ") != std::string::npos, "p from config file");
        EXPECT(from_cfg.out.find("\"seed\": 5") != std::string::npos, "seed from config file");
        RunResult override_p = run(bin + " norm --space hp --p 2 --config " + cfg_path + poly);
        EXPECT(override_p.out.find("\"p\": 2, ") != std::string::npos, "flag overrides config");
    }

    // --out atomic write of a norm
    {
        const std::string out_path = "/tmp/dirspace_cli_norm.json";
        std::remove(out_path.c_str());
        RunResult r = run(bin + " norm --space b2 --poly '{\"N\":2,\"coeffs\":[[2,1,0]]}' --out " +
                          out_path);
        EXPECT(r.exit_code == 0, "norm --out exit");
        std::ifstream in(out_path);
        EXPECT(in.good(), "out file written");
        std::stringstream ss;
        ss << in.rdbuf();
        EXPECT(ss.str().find("0.70710678118654757") != std::string::npos, "b2 of e_2 = 2^-1/2");
    }

    if (g_failures == 0) std::puts("cli_tests: all checks passed");
    return g_failures == 0 ? 0 : 1;
}
