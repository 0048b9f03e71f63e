// report.cpp: verification reports and suite configuration

#include "mtk/report.hpp"

#include <algorithm>
#include <cmath>

namespace mtk::verify {

void validate(const SuiteConfig& cfg) {
    if (cfg.dim < 2) throw ConfigError("--dim must be at least 2");
    if (!(cfg.beta > 0.0) || !std::isfinite(cfg.beta)) throw ConfigError("--beta must be positive and finite");
    if (cfg.cutoff < 1) throw ConfigError("--cutoff must be at least 1");
    if (cfg.ncut < 2) throw ConfigError("--ncut must be at least 2");
    if (cfg.radial < 1) throw ConfigError("--radial must be at least 1");
    if (cfg.angular < 2) throw ConfigError("--angular must be at least 2");
    if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) throw ConfigError("--tol must be positive and finite");
    if (cfg.threads < 1) throw ConfigError("--threads must be at least 1");
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(const std::string& name, const std::string& anchor, double max_error, double bound) {
    const double scaled = bound > 0.0 ? bound * config.tol : 0.0;
    const bool ok = std::isfinite(max_error) && max_error <= scaled;
    checks.push_back({name, anchor, max_error, scaled, ok});
}

void Report::add_erratum(Erratum e) {
    const bool seen = std::any_of(errata.begin(), errata.end(), [&](const Erratum& x) { return x.id == e.id; });
    if (!seen) errata.push_back(std::move(e));
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    for (const auto& e : other.errata) add_erratum(e);
}

nlohmann::json config_json(const SuiteConfig& cfg) {
    return {{"dim", cfg.dim},       {"beta", cfg.beta},       {"cutoff", cfg.cutoff},
            {"ncut", cfg.ncut},     {"radial", cfg.radial},   {"angular", cfg.angular},
            {"tol", cfg.tol},       {"seed", cfg.seed}};
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"anchor", c.anchor},
                          {"max_error", c.max_error},
                          {"bound", c.bound},
                          {"pass", c.pass}});
    }
    nlohmann::json errata = nlohmann::json::array();
    for (const auto& e : r.errata) {
        errata.push_back({{"id", e.id},
                          {"printed", e.printed},
                          {"implemented", e.implemented},
                          {"witness", e.witness},
                          {"witness_value", e.witness_value}});
    }
    nlohmann::json out;
    out["suite"] = r.suite;
    out["config"] = config_json(r.config);
    out["checks"] = checks;
    out["errata"] = errata;
    out["pass"] = r.passed();
    out["version"] = kVersion;
    out["elapsed_ms"] = r.elapsed_ms ? nlohmann::json(*r.elapsed_ms) : nlohmann::json(nullptr);
    return out;
}

std::string dump(const Report& r) {
    return to_json(r).dump(2) + "\n";
}

} // namespace mtk::verify
