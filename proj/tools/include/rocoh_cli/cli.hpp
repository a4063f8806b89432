#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rocoh::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on invalid input and 1 when an internal cross-check disagrees.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rocoh::cli
