#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domtri {

/// Runs one CLI invocation. args excludes the program name. Reports go to
/// out as JSON (or DOT with --dot); diagnostics go to err.
/// Exit status: 0 success, 1 domain or input error, 2 defect.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domtri
