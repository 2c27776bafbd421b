#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bifree {

// Runs the command line (without the program name). Returns 0 when the
// requested property holds or the computation succeeded, 1 when a
// counterexample was found, 2 on usage or data errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bifree
