#pragma once

#include <iosfwd>

namespace srcomb::cli {

/// Runs the srcomb command-line interface.  Exit codes: 0 on success, 1 on
/// usage or parameter errors, 2 when a verify subcommand finds a mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srcomb::cli
