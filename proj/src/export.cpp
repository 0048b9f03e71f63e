// export.cpp: hermite coefficients, quadrature nodes, Delta spectrum, Wigner grid

#include "mtk/export.hpp"

#include "mtk/complex_hermite.hpp"
#include "mtk/hs_space.hpp"
#include "mtk/landau.hpp"
#include "mtk/modular.hpp"
#include "mtk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mtk::verify {

namespace {

using nlohmann::json;

std::string emit(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                 const json& doc, TableFormat format) {
    if (format == TableFormat::json) return doc.dump(2) + "\n";
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\r\n";
    }
    return out.str();
}

std::string hermite_coeffs(const ExportOptions& opt) {
    if (opt.order < 0 || opt.order > 40) throw ConfigError("--order must lie in [0, 40]");
    std::vector<std::vector<std::string>> rows;
    json entries = json::array();
    for (int n = 0; n <= opt.order; ++n)
        for (int k = 0; k <= opt.order; ++k) {
            const hermite::BivarPoly h = hermite::ch_recursion(n, k);
            json coeffs = json::array();
            for (const auto& [mono, c] : h.terms()) {
                const std::string re = hermite::to_string(c.re);
                const std::string im = hermite::to_string(c.im);
                rows.push_back({std::to_string(n), std::to_string(k), std::to_string(mono.first),
                                std::to_string(mono.second), re, im});
                coeffs.push_back({{"m", mono.first}, {"j", mono.second}, {"re", re}, {"im", im}});
            }
            entries.push_back({{"n", n}, {"k", k}, {"coefficients", coeffs}});
        }
    return emit({"n", "k", "m", "j", "re", "im"}, rows, {{"table", "hermite_coeffs"}, {"polynomials", entries}},
                opt.format);
}

std::string quad_rule(const SuiteConfig& cfg, const ExportOptions& opt) {
    const quad::ComplexGaussRule rule = quad::build_rule(cfg.radial, cfg.angular);
    std::vector<std::vector<std::string>> rows;
    json nodes = json::array();
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Complex z = rule.nodes[i];
        rows.push_back({std::to_string(i), format_double(z.real()), format_double(z.imag()), format_double(rule.weights[i])});
        nodes.push_back({{"index", i}, {"re", z.real()}, {"im", z.imag()}, {"weight", rule.weights[i]}});
    }
    return emit({"index", "re", "im", "weight"}, rows,
                {{"table", "quad_rule"}, {"radial", cfg.radial}, {"angular", cfg.angular}, {"nodes", nodes}}, opt.format);
}

std::string delta_spectrum(const SuiteConfig& cfg, const ExportOptions& opt) {
    const auto w = modular::build_weights(cfg.beta, cfg.dim);
    std::vector<std::vector<std::string>> rows;
    json entries = json::array();
    for (Index i = 0; i < w.n; ++i)
        for (Index j = 0; j < w.n; ++j) {
            const double ratio = std::exp(w.log_alpha(i) - w.log_alpha(j));
            rows.push_back({std::to_string(i), std::to_string(j), format_double(ratio)});
            entries.push_back({{"i", i}, {"j", j}, {"ratio", ratio}});
        }
    return emit({"i", "j", "ratio"}, rows,
                {{"table", "delta_spectrum"}, {"beta", cfg.beta}, {"dim", cfg.dim}, {"eigenvalues", entries}}, opt.format);
}

std::string wigner_grid(const SuiteConfig& cfg, const ExportOptions& opt) {
    if (opt.n < 0 || opt.l < 0 || opt.n >= cfg.ncut || opt.l >= cfg.ncut)
        throw ConfigError("--n and --l must lie in [0, ncut)");
    const hs::HSVector x = hs::matrix_unit(cfg.ncut, opt.n, opt.l);
    std::vector<std::vector<std::string>> rows;
    json samples = json::array();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const double px = -2.0 + i;
            const double py = -2.0 + j;
            const Complex v = landau::wigner_sample(x, px, py);
            rows.push_back({format_double(px), format_double(py), format_double(v.real()), format_double(v.imag())});
            samples.push_back({{"x", px}, {"y", py}, {"re", v.real()}, {"im", v.imag()}});
        }
    return emit({"x", "y", "re", "im"}, rows,
                {{"table", "wigner_grid"}, {"n", opt.n}, {"l", opt.l}, {"ncut", cfg.ncut}, {"samples", samples}},
                opt.format);
}

} // namespace

const std::vector<std::string>& table_names() {
    static const std::vector<std::string> names{"hermite_coeffs", "quad_rule", "delta_spectrum", "wigner_grid"};
    return names;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string export_table(const std::string& what, const SuiteConfig& cfg, const ExportOptions& opt) {
    if (std::find(table_names().begin(), table_names().end(), what) == table_names().end())
        throw UsageError("unknown table '" + what + "'");
    validate(cfg);
    try {
        if (what == "hermite_coeffs") return hermite_coeffs(opt);
        if (what == "quad_rule") return quad_rule(cfg, opt);
        if (what == "delta_spectrum") return delta_spectrum(cfg, opt);
        return wigner_grid(cfg, opt);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const std::overflow_error& e) {
        throw ConfigError(e.what());
    }
}

} // namespace mtk::verify
