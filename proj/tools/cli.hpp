#pragma once

#include <iosfwd>

namespace nonufd::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kUnsupported = 3,
  kInconclusive = 4,
};

/// Runs one command line. Everything meant for the user goes to `out`;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nonufd::cli
