#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunkl/geometry.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

/// Bad key, bad value or inconsistent combination; raised before any
/// computation starts.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ScenarioInfo {
    const char* id;
    const char* summary;
};

/// Every runnable scenario in display order.
const std::vector<ScenarioInfo>& scenario_catalog();

struct ScenarioConfig {
    std::string scenario;

    // Model: either multiplicities (product model, d = k.size()) or (d, gamma).
    std::vector<double> k{0.0};
    std::optional<int> d;
    std::optional<double> gamma;

    double p = 2.0;
    double q = 2.0;
    double beta = 1.0;

    std::string profile = "gaussian(1)";
    std::string weight = "constant(1)";  // g in the Fourier-side inequalities
    std::string phi = "const";           // Cesaro weight
    std::vector<std::string> family{"indicator(1,2)", "indicator(0,1)", "gaussian(1)", "exp(1)", "extremal(0.5)"};
    std::vector<double> theta{1.0, 2.0, 4.0};

    int j_min = -30;
    int j_max = 40;
    double s_max = 64.0;
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;

    std::uint64_t seed = 1;
    int samples = 200;

    /// Plain text: one "key = value" per line, '#' starts a comment. Lists
    /// are comma separated; family entries are separated by ';'.
    static ScenarioConfig parse(const std::string& text);
    static ScenarioConfig load(const std::string& path);

    /// Assigns one key from its text form; throws ConfigError.
    void set(const std::string& key, const std::string& value);
    static const std::vector<std::string>& keys();

    /// Checks ranges and parses every profile / weight text once.
    void validate() const;
    ModelParams model() const;
    QuadratureSpec quadrature() const;
};

/// Validates, then runs. A check that throws becomes a failed record; its
/// siblings still run.
VerificationReport run_scenario(const ScenarioConfig& config);

}  // namespace dunkl
