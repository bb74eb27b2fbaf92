#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace subvis::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_data = 2,
    exit_internal = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out is given; diagnostics always go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Shortest decimal that reads back to the same double, always with a
/// decimal point or exponent ("2.0", "0.5", "1e-07"). Locale independent.
std::string format_number(double value);

} // namespace subvis::cli
