#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gonscroll {

// Command-line front end.  `args` excludes the program name.  Exit codes:
// 0 success / all fixtures match, 1 usage error, 2 precondition violation,
// 3 fixture mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gonscroll
