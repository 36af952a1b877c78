// check.hpp: Built-in invariant suite behind the `check` subcommand

#pragma once

#include <string>
#include <vector>

namespace otto::check {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Fast self-checks: anchors, first law, Carnot bounds, global steady state,
// bi-orthogonality and the NELC fixed point against brute-force iteration.
std::vector<CheckResult> run_checks(unsigned seed = 12345);

} // namespace otto::check
