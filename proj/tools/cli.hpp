#pragma once
// Command-line front end. Exit codes: 0 success, 1 negative decision,
// 2 usage or input error, 3 budget exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace sqdup::cli {

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqdup::cli
