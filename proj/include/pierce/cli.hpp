#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pierce::cli {

inline constexpr int kPass = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kUsageError = 2;

/// Entry point of the `pierce` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pierce::cli
