// Command-line front end: subcommand dispatch, report construction, and
// exit-code policy (0 pass, 1 fail, 2 error).
#pragma once

#include <ostream>

namespace stemcalc {

/// Parses `argv` and runs one subcommand, writing reports to `out` and
/// error messages to `err`.  Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace stemcalc
