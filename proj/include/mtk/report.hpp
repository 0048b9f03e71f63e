// report.hpp: verification reports and suite configuration

#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtk::verify {

inline constexpr const char* kVersion = "1.0.0";

struct SuiteConfig {
    long dim = 16;
    double beta = 0.7;
    int cutoff = 10;
    long ncut = 64;
    int radial = 40;
    int angular = 64;
    /// Multiplies every non-exact bound.
    double tol = 1.0;
    std::uint64_t seed = 42;
    int threads = 1;
    bool timing = false;
};

/// Raised for configurations that violate a module precondition.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for unknown suite or table names.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError naming the first invalid field.
void validate(const SuiteConfig& cfg);

struct Check {
    std::string name;
    /// The identity under test, in formula form.
    std::string anchor;
    double max_error = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct Erratum {
    std::string id;
    std::string printed;
    std::string implemented;
    std::string witness;
    double witness_value = 0.0;
};

struct Report {
    std::string suite;
    SuiteConfig config;
    std::vector<Check> checks;
    std::vector<Erratum> errata;
    std::optional<double> elapsed_ms;

    bool passed() const;
    /// Appends a check; a positive bound is scaled by config.tol, a zero bound
    /// marks an exact check.
    void add(const std::string& name, const std::string& anchor, double max_error, double bound);
    void add_erratum(Erratum e);
    void merge(const Report& other);
};

nlohmann::json to_json(const Report& r);
nlohmann::json config_json(const SuiteConfig& cfg);
/// Serialized report with a trailing newline.
std::string dump(const Report& r);

} // namespace mtk::verify
