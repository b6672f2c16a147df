#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lwsurf {

/// Runs the command-line tool. Returns 0 on success, 1 when verification or
/// the computation fails, 2 for usage and configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lwsurf
