#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 math-domain error, 3 size cap exceeded.

#include <ostream>
#include <string>
#include <vector>

namespace constaclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitCap = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace constaclass::cli
