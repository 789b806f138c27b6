#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisect::cli {

// Runs the command line given argv-style arguments (program name excluded),
// writing results to `out` and diagnostics to `err`. Returns the exit code:
// 0 success, 1 domain failure, 2 unreadable or unparseable input / bad flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Convenience wrapper for main().
int run(int argc, char** argv);

}  // namespace trisect::cli
