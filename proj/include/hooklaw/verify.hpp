#pragma once

#include "hooklaw/partition.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hooklaw {

enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

using HookFunction = std::function<int(const Partition&, Cell)>;

// sum_lambda sum_c h^m == sum_lambda sum_j lambda_j^{m+1} for n <= max_n,
// 1 <= m <= max_m, with `hook` standing in for hook_length.
CheckResult check_han_identity(int max_n, int max_m, const HookFunction& hook = hook_length);

// Runs the quick (< 1 min) or full (Monte Carlo included) battery, writing a
// PASS/FAIL line per check to `report` as each finishes.
std::vector<CheckResult> run_verification(VerifyLevel level, int threads, std::ostream& report);

} // namespace hooklaw
