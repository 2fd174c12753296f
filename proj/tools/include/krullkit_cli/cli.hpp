#pragma once

#include <iosfwd>

namespace krullkit::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kUnknown = 2,
  kUsage = 3,
  kResource = 4,
  kInternal = 5,
};

/// Runs one command line. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace krullkit::cli
