#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bow {

// Exit codes: 0 success, 1 usage, 2 invalid input, 3 a check failed.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bow
