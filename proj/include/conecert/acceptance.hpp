#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "conecert/config.hpp"

namespace conecert::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool exact = false;  // exact-arithmetic criterion: failure is mathematical
    std::string detail;
    double seconds = 0.0;
};

// Runs the full verification suite, one pass/fail line per criterion on
// `log`. Exact failures are mathematical counterexamples; numeric failures
// are tolerance breaches.
std::vector<CriterionResult> run_all(const NumericConfig& cfg, std::ostream& log);

// 0 all pass; 2 any exact criterion failed; 3 only numeric criteria failed.
int exit_code(const std::vector<CriterionResult>& results);

}  // namespace conecert::acceptance
