#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ratmaps::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kDecided = 0,
  kPrecondition = 1,
  kParseError = 2,
  kAlarm = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratmaps::cli
