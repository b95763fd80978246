#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nary::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kSizeGuard = 3 };

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nary::cli
