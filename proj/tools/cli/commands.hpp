#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lislab::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailure = 1,
    kUsageError = 2,
};

/// Entry point for `lislab verify|maxplus|omv|plot|bench`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lislab::cli
