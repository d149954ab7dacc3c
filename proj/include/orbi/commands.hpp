#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbi::cli {

/// Exit codes of the front-end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;

/// Runs the `orbi` front-end with `args` (program name excluded), writing the
/// report to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbi::cli
