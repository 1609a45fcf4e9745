#pragma once

#include <iosfwd>

namespace warp_lis::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { ok = 0, usage = 2, data_error = 3, internal_error = 4 };

/// Runs the command line. Results and error objects go to `out` as JSON;
/// warnings and help text go to `err` and `out` respectively.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace warp_lis::cli
