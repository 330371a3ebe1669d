#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tq::cli {

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a verification suite
/// fails and 2 for input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tq::cli
