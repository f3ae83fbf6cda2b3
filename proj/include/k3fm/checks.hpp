#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "k3fm/scalar.hpp"

namespace k3fm {

enum class OutputFormat { Text, Structured };

std::vector<Rational> default_t_grid();
std::vector<GaussRational> default_zeta_grid();

struct RunConfig {
    std::vector<Rational> t_grid = default_t_grid();
    std::vector<GaussRational> zeta_grid = default_zeta_grid();
    /// Run records at grid samples / with t and zeta kept symbolic.
    bool sampled = true;
    bool symbolic = true;
    OutputFormat format = OutputFormat::Text;
    /// Suite names; empty means all.
    std::vector<std::string> filter;
    std::uint64_t seed = 20240917;
    int property_cases = 1000;
};

/// Throws ConfigError on an empty grid, t <= 1, a non-positive case count or
/// an unknown suite name.
void validate(const RunConfig& cfg);

/// Reads `key = value` lines ('#' starts a comment) on top of `base`. Keys:
/// t_grid, zeta_grid (comma separated), format, checks, seed, property_cases.
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// One verdict. witness is the residual (got - expected), "0" on success.
struct CheckDescriptor {
    std::string name;
    std::string anchor;
    std::string params;
    bool pass = false;
    std::string witness;
};

struct SuiteInfo {
    std::string name;
    std::string anchor;
};

/// Registration order.
const std::vector<SuiteInfo>& registered_suites();

/// Runs the selected suites concurrently and reports in registration order.
std::vector<CheckDescriptor> run_checks(const RunConfig& cfg);

bool all_pass(const std::vector<CheckDescriptor>& records);

std::string format_text(const std::vector<CheckDescriptor>& records);
/// JSON array of {name, anchor, params, verdict, witness}, keys in that order.
std::string format_structured(const std::vector<CheckDescriptor>& records);

} // namespace k3fm
