#include <iostream>

#include "conecert/acceptance.hpp"

// Acceptance gate: one pass/fail line per criterion; exit 0 only when every
// criterion holds at its stated tolerance.
int main() {
    conecert::NumericConfig cfg;
    const auto results = conecert::acceptance::run_all(cfg, std::cout);
    const int code = conecert::acceptance::exit_code(results);
    int passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return code;
}
