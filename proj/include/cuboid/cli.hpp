#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuboid::cli {

enum ExitCode : int {
  kOk = 0,            // success, everything as conjectured
  kFound = 1,         // counterexample or perfect-cuboid witness
  kUsage = 2,         // bad arguments, bad parameters, unwritable output
  kInconsistent = 3,  // two independent checks disagree
};

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuboid::cli
