#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cackit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // verification, construction or simulation failure
inline constexpr int kUsage = 2;
inline constexpr int kRefused = 3;  // envelope or budget refusal

/// Runs one command; `args` excludes the program name. Payload goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cackit::cli
