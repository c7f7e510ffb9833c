// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <cstdio>

#include "dstar/verify.hpp"

int main() {
    auto results = dstar::run_acceptance();
    bool ok = true;
    for (const auto& r : results) {
        std::printf("[%s] %s (%.2f s)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed"
                           : "acceptance: FAILURES present");
    return ok ? 0 : 1;
}
