#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cquad::cli {

/// Runs the `cq` command line. args[0] is the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on argument errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cquad::cli
