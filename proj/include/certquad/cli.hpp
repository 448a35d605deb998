#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace certquad {

// Run one CLI invocation. `args` excludes the program name. Returns the
// process exit status: 0 on success, 1 on usage/parse/domain errors, 2 when
// the adaptive driver stopped at its interval cap without meeting tol.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// main()-shaped wrapper over std::cout / std::cerr.
int run_cli(int argc, const char* const* argv);

} // namespace certquad
