#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conecert {

// Batch CLI: every command writes one JSON report (stdout or --out) with the
// effective config embedded. Exit codes: 0 success, 1 usage error,
// 2 mathematical counterexample, 3 partial or tolerance failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conecert
