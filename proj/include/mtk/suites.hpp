// suites.hpp: verification suites behind `modkit verify`

#pragma once

#include "mtk/report.hpp"

#include <string>
#include <vector>

namespace mtk::verify {

/// modular, kms, landau, hermite, quadrature, coherent, wigner, all.
const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown name and ConfigError for a configuration
/// that violates a module precondition.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

/// The documented inconsistencies shared by the landau, hermite and coherent
/// suites, each with a computed witness.
std::vector<Erratum> core_errata();

} // namespace mtk::verify
