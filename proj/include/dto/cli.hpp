#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dto::cli {

inline constexpr const char* kOutputDirEnv = "DTO_OUTPUT_DIR";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kUsageError = 2;

/// Entry point for the `dto` executable. args excludes the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dto::cli
