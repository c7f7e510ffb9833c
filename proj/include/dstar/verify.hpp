#pragma once

#include <string>
#include <vector>

namespace dstar {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

// Named verification suites: arith, lie, count, theta, cones, zeta, funeq.
// "deep" raises the sweep bounds (oracle-theta series through order 10 and
// wider enumeration windows).
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, bool deep);

// The acceptance criteria, each with its runtime budget enforced.
std::vector<CheckResult> run_acceptance();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dstar
