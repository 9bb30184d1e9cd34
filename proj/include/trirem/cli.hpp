#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace trirem::cli {

inline constexpr std::string_view tool_version = "1.0.0";

enum ExitCode : int {
    ok = 0,
    failure = 1,
    usage_error = 2,
    bound_exceeded = 3,
};

/// Run the command line `args` (args[0] is the program name). Results go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trirem::cli
