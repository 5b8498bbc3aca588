#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degenlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 check violations, 2 usage or input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace degenlab::cli
