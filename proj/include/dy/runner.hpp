#pragma once

#include "dy/config.hpp"
#include "dy/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dy {

inline constexpr const char* kToolName = "dycoh";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
    std::optional<int> max_degree;
    bool equivariant = false;
    std::string suite;  // for `check`; empty means all suites for `report`
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<std::string> field_override;  // "Q" or "F<p>"
};

struct RunResult {
    Json report;
    std::string betti_csv;  // nonempty when a betti table was computed
    bool ok = false;
};

inline const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s = {
        "complex",    "cup-derivation",       "weak-comp",   "recovery",
        "dga",        "equivariant",          "graded-commutativity", "gerstenhaber"};
    return s;
}

/// Executes `validate`, `betti`, `check`, or `report` on a parsed
/// configuration. Throws ConfigError for malformed configurations/options;
/// check failures are reported in the result, not thrown.
RunResult run_command(const std::string& command, const Json& config, const RunOptions& opts);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace dy
