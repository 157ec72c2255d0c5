#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aircode::cli {

// Exit status: 0 success, 1 verification/decode failure, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aircode::cli
