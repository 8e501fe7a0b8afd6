#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyo::cli {

/// Exit codes: 0 success or equality, 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyo::cli
