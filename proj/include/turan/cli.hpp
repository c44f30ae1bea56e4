#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

/// Entry point behind the command-line binary, separated so tests can drive
/// it directly. Exit codes: 0 success (found / agree), 1 a well-formed
/// negative outcome (no packing, disagreement, violations), 2 usage or input
/// errors. Diagnostics go to err only.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
