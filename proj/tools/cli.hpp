#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liepm::cli {

enum ExitCode : int { pass = 0, fail = 1, input_error = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liepm::cli
