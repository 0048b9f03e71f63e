// modkit: run verification suites and export tables
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on a usage
// or configuration error.

#include "mtk/export.hpp"
#include "mtk/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace mtk::verify;

void add_config_options(CLI::App* cmd, SuiteConfig& cfg) {
    cmd->add_option("--dim", cfg.dim, "Hilbert space dimension N");
    cmd->add_option("--beta", cfg.beta, "inverse temperature");
    cmd->add_option("--cutoff", cfg.cutoff, "coherent-state cutoff M");
    cmd->add_option("--ncut", cfg.ncut, "single-mode Fock cutoff");
    cmd->add_option("--radial", cfg.radial, "radial (Gauss-Laguerre) order R");
    cmd->add_option("--angular", cfg.angular, "angular order K");
    cmd->add_option("--tol", cfg.tol, "scale factor for every non-exact bound");
    cmd->add_option("--seed", cfg.seed, "seed for random operators");
    cmd->add_option("--threads", cfg.threads, "worker threads; does not change the report");
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return std::cout ? 0 : 2;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "modkit: cannot write " << path << "\n";
        return 2;
    }
    out << text;
    out.close();
    if (!out) {
        std::cerr << "modkit: cannot write " << path << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modkit: finite-dimensional modular theory and Landau-level verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    SuiteConfig cfg;
    std::string out_path;
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
    verify->add_option("suite", suite, "modular, kms, landau, hermite, quadrature, coherent, wigner or all")->required();
    add_config_options(verify, cfg);
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_flag("--timing", cfg.timing, "record wall time in elapsed_ms");

    std::string table;
    ExportOptions opt;
    std::string format = "csv";
    auto* exp = app.add_subcommand("export", "write a plot-ready table");
    exp->add_option("table", table, "hermite_coeffs, quad_rule, delta_spectrum or wigner_grid")->required();
    add_config_options(exp, cfg);
    exp->add_option("--out", out_path, "write the table here instead of stdout");
    exp->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("--order", opt.order, "hermite_coeffs: largest n and k");
    exp->add_option("--n", opt.n, "wigner_grid: row label of X_nl");
    exp->add_option("--l", opt.l, "wigner_grid: column label of X_nl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            const Report report = run_suite(suite, cfg);
            const int io = write_output(dump(report), out_path);
            if (io != 0) return io;
            for (const auto& c : report.checks)
                if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.max_error << " > " << c.bound << "\n";
            return report.passed() ? 0 : 1;
        }
        opt.format = format == "json" ? TableFormat::json : TableFormat::csv;
        return write_output(export_table(table, cfg, opt), out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "modkit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "modkit: " << e.what() << "\n";
        return 2;
    }
}
