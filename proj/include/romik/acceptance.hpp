#pragma once

// The acceptance suite: ten exact checks over the whole library, shared by
// the acceptance test binary and `romik selftest`.

#include <iosfwd>
#include <string>
#include <vector>

namespace romik {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` in 1..10. Exceptions are caught and reported as
/// failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

/// One line per criterion: "[PASS] 3 funnel theorem (0.41 s): ...".
/// Timings vary between runs; without them the output is byte-stable.
void print_results(std::ostream& os, const std::vector<CriterionResult>& results, bool with_timing = true);

}  // namespace romik
