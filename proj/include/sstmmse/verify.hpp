// Named property suites over the analytic engine: closed-form identities,
// nonnegativity and ordering facts, density normalization, and curve
// behavior. Each suite scans an epsilon grid over every built-in code and
// applicable mode plus randomized term statistics, and reports violations
// with witness parameters.

#pragma once

#include <string>
#include <vector>

namespace sstmmse::verify {

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

std::vector<std::string> suite_names();

// Runs one suite ("all" runs every suite). Throws std::invalid_argument for
// unknown names.
std::vector<SuiteResult> run_suites(const std::string& name);

}  // namespace sstmmse::verify
