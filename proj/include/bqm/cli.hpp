#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bqm {

/// Parses the arguments (program name excluded) and runs one subcommand.
/// Returns 0 on success, 2 for invalid input or usage, 1 when an internal
/// check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqm
