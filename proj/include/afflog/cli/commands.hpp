#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace afflog {

/// Exit codes: 0 ok or inconclusive, 1 a verified bound was violated (or a
/// selftest check failed), 2 usage, parse or hypothesis errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same as above; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afflog
