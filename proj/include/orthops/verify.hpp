#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orthops {

/// Check suites runnable from the CLI. Each check re-derives its expected
/// values from an independent construction (closed form vs recurrence,
/// generated roots vs Sturm counts, ...), so a pass is a cross-validation,
/// not a tautology.
enum class Suite { all, laguerre, main_theorem, roots };

Suite suite_from_name(const std::string& name);  // throws std::invalid_argument
const char* to_string(Suite s);

struct VerifyConfig {
    int degree_bound = 25;   // N: identities are checked exactly up to here
    std::uint64_t seed = 0;  // same seed + bound => byte-identical report
};

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

/// Runs the selected suite. Randomized checks draw from deterministic
/// per-check streams derived from the seed. Throws std::invalid_argument
/// when the config is unusable (degree bound < 4).
std::vector<CheckResult> run_suite(Suite suite, const VerifyConfig& cfg);

}  // namespace orthops
