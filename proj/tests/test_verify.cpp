#include "mtk/export.hpp"
#include "mtk/suites.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace mtk::verify;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        REQUIRE(!line.empty());
        REQUIRE(line.back() == '\r');
        line.pop_back();
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("modular suite at defaults") {
    const Report r = run_suite("modular", SuiteConfig{});
    CHECK(r.passed());
    REQUIRE_FALSE(r.checks.empty());
    for (const Check& c : r.checks) {
        INFO(c.name);
        CHECK(c.max_error <= 1e-10);
        CHECK_FALSE(c.anchor.empty());
    }
    CHECK(r.errata.empty());
    CHECK_FALSE(r.elapsed_ms.has_value());
}

TEST_CASE("hermite suite exact checks report zero") {
    const Report r = run_suite("hermite", SuiteConfig{});
    CHECK(r.passed());
    int exact = 0;
    for (const Check& c : r.checks) {
        if (c.bound != 0.0) continue;
        ++exact;
        INFO(c.name);
        CHECK(c.max_error == 0.0);
    }
    CHECK(exact > 5);
    // the shared errata are mandatory for this suite
    for (const Erratum& e : core_errata()) {
        bool found = false;
        for (const Erratum& x : r.errata) found = found || x.id == e.id;
        CHECK(found);
    }
}

TEST_CASE("reports are deterministic across thread counts") {
    SuiteConfig one;
    one.dim = 8;
    SuiteConfig many = one;
    many.threads = 4;
    CHECK(dump(run_suite("kms", one)) == dump(run_suite("kms", many)));
    CHECK(dump(run_suite("kms", one)) == dump(run_suite("kms", one)));
    SuiteConfig other = one;
    other.seed = 7;
    CHECK(dump(run_suite("kms", one)) != dump(run_suite("kms", other)));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), UsageError);
    SuiteConfig bad;
    bad.beta = -1.0;
    CHECK_THROWS_AS(run_suite("modular", bad), ConfigError);
    SuiteConfig small;
    small.ncut = 6;
    CHECK_THROWS_AS(run_suite("landau", small), ConfigError);
    SuiteConfig coarse;
    coarse.radial = 3;
    CHECK_THROWS_AS(run_suite("coherent", coarse), ConfigError);
    SuiteConfig huge;
    huge.beta = 60.0;
    huge.dim = 40;
    CHECK_THROWS_AS(run_suite("modular", huge), ConfigError);
    SuiteConfig threads;
    threads.threads = 0;
    CHECK_THROWS_AS(validate(threads), ConfigError);
}

TEST_CASE("report schema") {
    SuiteConfig cfg;
    cfg.dim = 6;
    cfg.timing = true;
    const Report r = run_suite("kms", cfg);
    const nlohmann::json j = to_json(r);
    for (const char* key : {"suite", "config", "checks", "errata", "version", "elapsed_ms", "pass"}) CHECK(j.contains(key));
    CHECK(j["suite"] == "kms");
    CHECK(j["config"]["dim"] == 6);
    CHECK(j["config"]["seed"] == 42);
    CHECK_FALSE(j["config"].contains("threads"));
    CHECK(j["elapsed_ms"].is_number());
    CHECK(j["version"] == kVersion);
    for (const auto& c : j["checks"]) {
        for (const char* key : {"name", "anchor", "max_error", "bound", "pass"}) CHECK(c.contains(key));
        CHECK(c["pass"] == (c["max_error"].get<double>() <= c["bound"].get<double>()));
    }
    CHECK(dump(r).back() == '\n');
}

TEST_CASE("tol scales non-exact bounds") {
    Report r;
    r.config.tol = 10.0;
    r.add("loose", "a = b", 5e-12, 1e-12);
    r.add("exact", "a == b", 0.0, 0.0);
    r.add("exact_fail", "a == b", 1e-300, 0.0);
    r.add("nan", "a = b", NAN, 1.0);
    CHECK(r.checks[0].bound == doctest::Approx(1e-11));
    CHECK(r.checks[0].pass);
    CHECK(r.checks[1].pass);
    CHECK_FALSE(r.checks[2].pass);
    CHECK_FALSE(r.checks[3].pass);
    CHECK_FALSE(r.passed());

    SuiteConfig tight;
    tight.dim = 6;
    tight.tol = 1e-6;
    CHECK_FALSE(run_suite("kms", tight).passed());
}

TEST_CASE("export hermite_coeffs") {
    const auto rows = parse_csv(export_table("hermite_coeffs", SuiteConfig{}, ExportOptions{}));
    REQUIRE(rows.size() == 56);
    CHECK(rows[0] == std::vector<std::string>{"n", "k", "m", "j", "re", "im"});
    std::vector<std::vector<std::string>> h11;
    for (const auto& row : rows)
        if (row[0] == "1" && row[1] == "1") h11.push_back(row);
    REQUIRE(h11.size() == 2);
    bool top = false;
    bool constant = false;
    for (const auto& row : h11) {
        top = top || (row[2] == "1" && row[3] == "1" && row[4] == "1" && row[5] == "0");
        constant = constant || (row[2] == "0" && row[3] == "0" && row[4] == "-1" && row[5] == "0");
    }
    CHECK(top);
    CHECK(constant);

    ExportOptions js;
    js.format = TableFormat::json;
    const auto doc = nlohmann::json::parse(export_table("hermite_coeffs", SuiteConfig{}, js));
    CHECK(doc["polynomials"].size() == 25);
    ExportOptions big;
    big.order = 41;
    CHECK_THROWS_AS(export_table("hermite_coeffs", SuiteConfig{}, big), ConfigError);
}

TEST_CASE("export delta_spectrum") {
    SuiteConfig cfg;
    cfg.beta = std::log(2.0);
    cfg.dim = 3;
    const auto rows = parse_csv(export_table("delta_spectrum", cfg, ExportOptions{}));
    REQUIRE(rows.size() == 10);
    const double expect[] = {1, 2, 4, 0.5, 1, 2, 0.25, 0.5, 1};
    for (int i = 0; i < 9; ++i) {
        CHECK(rows[i + 1][0] == std::to_string(i / 3));
        CHECK(rows[i + 1][1] == std::to_string(i % 3));
        CHECK(std::stod(rows[i + 1][2]) == doctest::Approx(expect[i]).epsilon(1e-14));
    }
}

TEST_CASE("export wigner_grid") {
    SuiteConfig cfg;
    const auto rows = parse_csv(export_table("wigner_grid", cfg, ExportOptions{}));
    REQUIRE(rows.size() == 26);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double x = std::stod(rows[i][0]);
        const double y = std::stod(rows[i][1]);
        const double want = std::exp(-(x * x + y * y) / 4) / std::sqrt(2 * std::numbers::pi);
        CHECK(std::abs(std::stod(rows[i][2]) - want) <= 1e-6);
        CHECK(std::abs(std::stod(rows[i][3])) <= 1e-6);
    }
    ExportOptions out_of_range;
    out_of_range.n = 64;
    CHECK_THROWS_AS(export_table("wigner_grid", cfg, out_of_range), ConfigError);
}

TEST_CASE("export quad_rule") {
    SuiteConfig cfg;
    cfg.radial = 2;
    cfg.angular = 3;
    const auto rows = parse_csv(export_table("quad_rule", cfg, ExportOptions{}));
    REQUIRE(rows.size() == 7);
    double wsum = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) wsum += std::stod(rows[i][3]);
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(export_table("nope", cfg, ExportOptions{}), UsageError);
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.1, -1.0 / 3.0, 6.02214076e23, 1e-300, 1.0}) CHECK(std::stod(format_double(x)) == x);
    CHECK(format_double(0.5) == "0.5");
}
