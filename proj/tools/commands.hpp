#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lop::cli {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

/// Every structural claim about P_n at one n, in a fixed order.
std::vector<CheckResult> run_verification(int n);

/// Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lop::cli
