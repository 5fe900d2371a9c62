#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace towercalc::cli {

/// Runs one command.  Answers go to out, diagnostics (exactly one line per
/// error) to err.  Exit status: 0 answered, 1 usage/parse error, 2 unknown
/// or outside the tables (stdout line prefixed "UNKNOWN:"), 3 obstructed.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace towercalc::cli
