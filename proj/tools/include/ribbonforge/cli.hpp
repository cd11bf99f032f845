#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbonforge::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // a "no" verdict: not representable, minor absent, ...
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one command. `args` excludes the program name. Machine output and
/// error payloads go to `out`; `err` only gets human-oriented progress.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ribbonforge::cli
