#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilpath::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// Runs one nilpath subcommand. `args` excludes the program name. The report
/// goes to `out`, usage errors to `err`. Returns 0 on pass, 1 on fail, 2 on
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilpath::cli
