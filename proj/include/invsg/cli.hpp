#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invsg {

// Command-line front end. `args` excludes the program name. Returns 0 on
// success, 1 on usage or input errors, 2 when a computational budget or
// size bound is exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invsg
