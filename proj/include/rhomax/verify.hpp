#pragma once

#include <string>
#include <vector>

namespace rhomax {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string message;
    double millis = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

// Runs the full verification suite; `only` filters checks by substring.
VerifyReport verify_paper(const std::string& only = "");

}  // namespace rhomax
