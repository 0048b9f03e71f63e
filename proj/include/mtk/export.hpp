// export.hpp: plot-ready tables behind `modkit export`
#pragma once

#include "mtk/report.hpp"

#include <string>
#include <vector>

namespace mtk::verify {

enum class TableFormat { csv, json };

struct ExportOptions {
    TableFormat format = TableFormat::csv;
    /// hermite_coeffs: largest n and k.
    int order = 4;
    /// wigner_grid: matrix unit X_nl to transform.
    int n = 0;
    int l = 0;
};

const std::vector<std::string>& table_names();

/// Table contents as text. Throws UsageError for an unknown table and
/// ConfigError for options outside the table's range.
std::string export_table(const std::string& what, const SuiteConfig& cfg, const ExportOptions& opt);

/// 17 significant digits, round-trip exact.
std::string format_double(double x);

} // namespace mtk::verify
