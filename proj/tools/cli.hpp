#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace yh::cli {

/// Exit status: 0 success, 1 verification failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yh::cli
