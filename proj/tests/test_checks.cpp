#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "k3fm/checks.hpp"
#include "k3fm/errors.hpp"

using namespace k3fm;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.t_grid = {Rational(3, 2), 4};
    cfg.zeta_grid = {GaussRational(Rational(1, 2)), GaussRational(0, 1), GaussRational(-2, 1)};
    cfg.property_cases = 20;
    return cfg;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST_CASE("default grids") {
    CHECK(default_t_grid().size() == 5);
    const auto zs = default_zeta_grid();
    CHECK(zs.size() == 20);
    std::set<std::string> distinct;
    for (const auto& z : zs) distinct.insert(z.to_string());
    CHECK(distinct.size() == 20);
    CHECK(std::count_if(zs.begin(), zs.end(), [](const auto& z) { return z.norm() == 1; }) >= 2);
}

TEST_CASE("suite names are unique and anchored") {
    std::set<std::string> names;
    for (const auto& s : registered_suites()) {
        CHECK_FALSE(s.anchor.empty());
        CHECK(names.insert(s.name).second);
    }
    CHECK(names.count("phiT-table") == 1);
    CHECK(names.count("mirror-thm4") == 1);
}

TEST_CASE("every suite round-trips through the filter") {
    for (const auto& s : registered_suites()) {
        RunConfig cfg = small_config();
        cfg.filter = {s.name};
        const auto records = run_checks(cfg);
        CAPTURE(s.name);
        CHECK_FALSE(records.empty());
        for (const auto& r : records) {
            CHECK(r.name == s.name);
            CHECK(r.anchor == s.anchor);
            CHECK(r.pass);
            CHECK(r.witness == "0");
        }
    }
}

TEST_CASE("phiT-table has one verdict per basis vector") {
    RunConfig cfg;
    cfg.filter = {"phiT-table"};
    const auto records = run_checks(cfg);
    CHECK(records.size() == 4);
    CHECK(all_pass(records));
}

TEST_CASE("symbolic mirror run") {
    RunConfig cfg;
    cfg.filter = {"mirror-thm4"};
    cfg.sampled = false;
    const auto records = run_checks(cfg);
    REQUIRE_FALSE(records.empty());
    CHECK(all_pass(records));
    CHECK(std::any_of(records.begin(), records.end(), [](const auto& r) { return r.params == "symbolic"; }));
}

TEST_CASE("report assembly follows registration order") {
    RunConfig cfg = small_config();
    cfg.filter = {"limits", "phiOmega-table", "properties"};
    const auto records = run_checks(cfg);
    std::vector<std::string> order;
    for (const auto& r : records)
        if (order.empty() || order.back() != r.name) order.push_back(r.name);
    CHECK(order == std::vector<std::string>{"phiOmega-table", "limits", "properties"});
}

TEST_CASE("structured output is deterministic") {
    RunConfig cfg = small_config();
    cfg.filter = {"jzeta-algebra", "mirror-normalization"};
    const std::string a = format_structured(run_checks(cfg));
    const std::string b = format_structured(run_checks(cfg));
    CHECK(a == b);
    const auto parsed = nlohmann::ordered_json::parse(a);
    REQUIRE(parsed.is_array());
    std::vector<std::string> keys;
    for (const auto& [k, v] : parsed.front().items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"name", "anchor", "params", "verdict", "witness"});
}

TEST_CASE("failures carry witnesses") {
    const std::vector<CheckDescriptor> records{{"x", "a", "p", false, "(-1)*C"}, {"y", "b", "q", true, "0"}};
    CHECK_FALSE(all_pass(records));
    const std::string text = format_text(records);
    CHECK(text.find("FAIL  x") != std::string::npos);
    CHECK(text.find("residual: (-1)*C") != std::string::npos);
    CHECK(text.find("2 checks, 1 failed") != std::string::npos);
    const auto j = nlohmann::json::parse(format_structured(records));
    CHECK(j[0]["verdict"] == "fail");
    CHECK(j[0]["witness"] == "(-1)*C");
}

TEST_CASE("configuration validation") {
    RunConfig cfg;
    cfg.t_grid.clear();
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = RunConfig{};
    cfg.zeta_grid.clear();
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = RunConfig{};
    cfg.t_grid = {1};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = RunConfig{};
    cfg.filter = {"nope"};
    CHECK_THROWS_AS(run_checks(cfg), ConfigError);
    cfg.filter = {"all"};
    CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("configuration files") {
    const auto good = write_temp("k3fm_good.conf", "# comment\n"
                                                   "t_grid = 3/2, 4  # trailing\n"
                                                   "zeta_grid = (3+4*i)/5, -2+i\n"
                                                   "format = structured\n"
                                                   "checks = limits, phiT-table\n"
                                                   "seed = 99\n"
                                                   "property_cases = 10\n");
    const RunConfig cfg = load_config(good);
    CHECK(cfg.t_grid == std::vector<Rational>{Rational(3, 2), 4});
    CHECK(cfg.zeta_grid ==
          std::vector<GaussRational>{GaussRational(Rational(3, 5), Rational(4, 5)), GaussRational(-2, 1)});
    CHECK(cfg.format == OutputFormat::Structured);
    CHECK(cfg.filter == std::vector<std::string>{"limits", "phiT-table"});
    CHECK(cfg.seed == 99);
    CHECK(cfg.property_cases == 10);

    CHECK_THROWS_AS(load_config(write_temp("k3fm_bad1.conf", "colour = blue\n")), ConfigError);
    CHECK_THROWS_AS(load_config(write_temp("k3fm_bad2.conf", "t_grid 3\n")), ConfigError);
    CHECK_THROWS_AS(load_config(write_temp("k3fm_bad3.conf", "t_grid = i\n")), ConfigError);
    CHECK_THROWS_AS(load_config(write_temp("k3fm_bad4.conf", "zeta_grid = 1 +\n")), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/k3fm.conf"), ConfigError);
}
