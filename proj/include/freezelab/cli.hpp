#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freezelab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerification = 2, kResource = 3 };

// args excludes the program name. Results go to out, diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freezelab::cli
