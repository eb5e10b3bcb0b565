#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyop {

/// Runs the command-line surface. Exit code 0 on pass, 1 on a failed check,
/// 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyop
