#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dalg {

/// Runs one CLI invocation (arguments without the program name). The
/// certificate goes to `out`, diagnostics to `err`. Returns 0 on success,
/// 1 on a negative decision, 2 on usage, parse or domain errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dalg
