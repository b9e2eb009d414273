#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctcsim::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // bad flags, unreadable files, malformed received spec
  kInvalidProgram = 2, // parse or validation error
  kRuntime = 3,        // fault, step limit, or domain budget exceeded
  kEmptyResult = 4,    // only with --expect-nonempty
};

/// Runs one ctcsim invocation. `args` excludes the executable name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctcsim::cli
