#pragma once

#include "pathpebble/guest_tree.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pathpebble {

/// Streams the obstruction trees for t, stopping when the visitor returns false.
using ObstructionSource = std::function<void (int t, const std::function<bool (const ObstructionTree &)> &)>;

struct AcceptanceConfig {
    /// Swappable so a tampered table can be fed in.
    ObstructionSource obstructions = for_each_obstruction;
    std::uint64_t seed = 20240611;
    /// Random hosts for the dichotomy property suite.
    int random_graphs = 200;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    /// Wall-clock tolerance; exceeding it fails the criterion.
    double limit_seconds = 0;
};

/// Runs every acceptance criterion in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig &config = {});

/// "PASS  [4] dichotomy: ... (0.21 s / 300 s)"
std::string format_result(const CriterionResult &result);

} // namespace pathpebble
