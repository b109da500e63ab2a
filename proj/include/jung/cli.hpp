#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jung::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRejected = 1,     // reason name written to the error stream
  kFormatError = 2,  // polynomial text, JSON document or command line
  kIoError = 3,
};

// Runs one command; args[0] is the program name. Files named "-" mean the
// given input or output stream.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jung::cli
