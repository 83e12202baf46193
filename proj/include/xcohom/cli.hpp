#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xcohom {

// Runs one subcommand and writes the report to `out`. Exit codes:
// 0 success, 2 parse error, 3 validation error, 4 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xcohom
