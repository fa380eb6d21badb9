#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spdual {

// Runs the command line front end. Exit codes: 0 all checks passed, 1 a
// mathematical violation was found, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spdual
