#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace romik::cli {

/// Runs one `romik` command. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 bad command line or input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace romik::cli
