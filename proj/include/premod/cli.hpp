#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace premod {

// exit codes: 0 clean, 1 semantic findings, 2 operational errors
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace premod
