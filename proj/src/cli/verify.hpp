// Runnable property suites behind `verify`: trace-distance contraction,
// the negativity Lipschitz inequality, the three-step difference chain,
// and the uniform-sphere law of the state sampler. Each suite reports the
// worst slack it saw; a positive slack is a violation.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entdyn::cli {

struct PropertyResult {
    std::string name;
    bool passed;
    double worst_slack; // max over trials of (lhs - rhs); <= 0 when the property holds
    std::string detail;
};

/// `suite` is one of contraction, lipschitz, chain, haar, or all; anything
/// else throws OutOfRange. `trials` scales the per-configuration sample
/// count. Deterministic in `seed`.
std::vector<PropertyResult> run_suite(const std::string& suite, int trials, std::uint64_t seed);

} // namespace entdyn::cli
