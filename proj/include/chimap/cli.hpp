#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chimap::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kIoError = 4;

// Runs one command line (args[0] is the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chimap::cli
