#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sciento {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or data errors
inline constexpr int kExitUsage = 2;

// Runs one `sciento` invocation. `args` excludes the program name.
// Reads SCIENTO_CASEFOLD from the environment.
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace sciento
