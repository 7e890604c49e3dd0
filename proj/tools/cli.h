#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torsionk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitUnsupported = 65;
inline constexpr int kExitInternal = 70;

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torsionk::cli
