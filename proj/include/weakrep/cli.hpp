#pragma once

#include <string>
#include <vector>

namespace weakrep {

// Full command-line surface. Returns the process exit code:
// 0 = success/SAT, 1 = UNSAT or invalid input, 2 = usage error.
int cli_main(const std::vector<std::string>& args);

}  // namespace weakrep
