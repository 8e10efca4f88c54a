#pragma once

#include "psigma/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace psigma {

struct CheckResult {
    std::string family;
    std::string name;
    int n = 0;
    /// The mathematical statement under test.
    std::string claim;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    std::vector<int> ns;
    /// Families to run; empty means all.
    std::vector<std::string> only;
    unsigned threads = 1;
    std::uint64_t seed = 20240601;
    /// Sample size for checks that are not exhaustive.
    std::size_t samples = 200;
};

/// census, basis, cone, essential, peripheral, e1, cochain, e2, poincare, ring, identities, mccool
const std::vector<std::string>& verify_families();

/// Runs every selected check; results come back in registration order whatever the thread count.
/// Throws std::invalid_argument for an unknown family name.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// {"passed": bool, "checks": [...]}; timing fields are optional so reports can be diffed.
Json verification_report(const std::vector<CheckResult>& results, bool with_timing);

} // namespace psigma
