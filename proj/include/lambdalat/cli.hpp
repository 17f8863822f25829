#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambdalat {

/// Exit codes: 0 when the checked property holds or verification is clean,
/// 1 on a violation or counterexample, 2 on usage, input or parse errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). FILE arguments may be
/// a path or `@NAME` for a built-in fixture.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lambdalat
