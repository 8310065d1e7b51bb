#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeuler::cli {

enum ExitCode : int {
    kOk = 0,
    kIdentityFailure = 1,
    kInvalidParameters = 2,
    kIoError = 3,
};

/// Runs the command line (args excludes the program name). Output goes to
/// `out` unless --output/--output-dir redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeuler::cli
