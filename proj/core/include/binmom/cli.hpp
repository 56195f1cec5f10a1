#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binmom {

// Exit codes shared by the library dispatch and the installed binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitPropertyViolation = 2;
inline constexpr int kExitUsage = 64;

// Full command-line dispatch: subcommands moment, asymptote, bounds, temme,
// converge, check, mc. Human-readable tables go to `out`; --out <path>
// writes the same rows as CSV instead. Exposed as a function so tests can
// drive the CLI in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binmom
