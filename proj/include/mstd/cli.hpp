#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Output schema version. Bumped whenever a column or field changes.
inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (args[0] is the program name). CSV goes to
/// `out` by default, JSON lines with --json; diagnostics go to `err`.
/// Returns 0 on success, 1 on usage errors, 2 when a computed value
/// contradicts the reference data or a verification fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstd::cli
