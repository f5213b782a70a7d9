#pragma once

#include <iosfwd>

namespace polyerg {

/// Dispatches argv to a subcommand and writes the JSON report. Exit codes:
/// 0 success, 2 argument error, 3 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyerg
