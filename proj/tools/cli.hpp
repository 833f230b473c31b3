#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indet::cli {

/// Runs one command; args excludes the program name. Returns the exit code:
/// 0 success or regular, 1 indeterminate or infeasible, 2 error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace indet::cli
