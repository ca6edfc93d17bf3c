#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseries::cli
{

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;        // a proved result failed, or I/O error
inline constexpr int exit_counterexample = 2; // a conjecture check found a violation
inline constexpr int exit_usage = 64;

// Runs one invocation. `args` excludes the program name. Reports go to `out`
// (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qseries::cli
