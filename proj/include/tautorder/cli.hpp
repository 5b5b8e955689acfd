#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tautorder::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kIdentityViolated = 2,
};

// args excludes the program name. Rendered output goes to `out`,
// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautorder::cli
