#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when verify-paper records a failure and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz::cli
