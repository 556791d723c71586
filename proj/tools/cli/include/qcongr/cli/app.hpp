#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcongr::cli {

/// Exit codes: 0 success, 1 a statement failed or was ill-formed, 2 usage
/// or internal error.
enum ExitCode { kOk = 0, kMathFailure = 1, kUsageError = 2 };

/// Runs the command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcongr::cli
