#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fullwiener::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Runs one command line (without the program name). `-` as input or output
/// refers to the given streams.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace fullwiener::cli
