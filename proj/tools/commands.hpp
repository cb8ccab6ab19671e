#pragma once

#include <iosfwd>

namespace tabkey::cli {

enum ExitCode : int {
    kOk = 0,
    kBadInput = 1,
    kDisagreement = 2,
    kCounterexample = 3,
};

/// Runs the tabkey command line. Results go to `out`; traces, diagnostics
/// and errors go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace tabkey::cli
