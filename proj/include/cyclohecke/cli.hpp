#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclohecke {

/// Runs one CLI invocation (args exclude the program name) writing to the
/// given streams; returns the process exit code. The binary's main() is a
/// thin wrapper, so tests can drive the exact command surface in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclohecke
