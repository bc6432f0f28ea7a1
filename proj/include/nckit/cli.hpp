#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nckit {

/// Dispatch a command line (without the program name). Exit codes:
/// 0 = PASS/success, 1 = FAIL, 2 = Undetermined, 3 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nckit
