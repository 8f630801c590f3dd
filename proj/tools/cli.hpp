#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace berger::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kOracleDisagreement = 2;
inline constexpr int kVerificationFailed = 3;

/// Parses `args` (without the program name) and runs one subcommand.
/// Results go to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace berger::cli
