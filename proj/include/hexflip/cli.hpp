#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexflip {

// Runs one CLI invocation.  Exit codes: 0 success / all checks pass,
// 1 a verification suite found a failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hexflip
