#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stab2cy::cli {

/// Exit codes: 0 success, 2 invalid input, 3 a verify suite found a
/// violation, 64 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitUsage = 64;

/// args excludes the program name. JSON goes to out (or --out FILE),
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stab2cy::cli
