#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdp {

// Exit codes of the driver.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInconclusive = 2;

// Runs the driver on args (without the program name), writing the report to
// out and diagnostics to err. Returns the exit code.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace kdp
