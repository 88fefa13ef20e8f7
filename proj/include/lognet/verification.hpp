#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lognet/exp_family.hpp"

namespace lognet {

/// theta1 in {+-0.5, +-1, +-2} x theta2 in {-0.25, -0.5, -1, -2}.
std::vector<NaturalParams> standard_grid();

inline constexpr std::uint64_t kVerificationSeed = 20240611;

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// One line per check, fixed order and fixed number formatting.
    std::string render() const;
};

/// Runs the invariant suite. Each check has its own tolerance; a supplied
/// override replaces all of them.
VerificationReport run_verification(std::optional<double> tolerance_override = std::nullopt);

}  // namespace lognet
