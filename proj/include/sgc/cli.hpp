#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidArguments = 2,
  kIoFailure = 3,
  kInvalidGraph = 4,
};

/// Runs one `sgc` invocation. Summaries go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgc::cli
