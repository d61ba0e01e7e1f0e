#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superbw {

// Full command dispatch, factored out of main() so tests can drive it.
// Exit codes: 0 success, 2 input error, 3 undetermined components under
// --strict. Diagnostics go to err; results go to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superbw
