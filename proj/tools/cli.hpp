#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bootperc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics and usage text to `err`. Returns the process exit code:
/// 0 success, 1 a checked property or certification failed, 2 usage or
/// input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace bootperc::cli
