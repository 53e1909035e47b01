#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logimath::cli {

/// Runs one CLI invocation (args without the program name). Data goes to
/// --out or to `out`; human diagnostics go to `err`. Returns the process
/// exit code: 0 pass, 1 failed verdict, 2 usage or runtime error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace logimath::cli
