#pragma once

// Command-line front end. run_cli is the whole program minus main(), so tests
// can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace projlab {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidParameter = 1,
    kExitIo = 2,
    kExitAssertion = 3,
};

/// args excludes the program name. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "0.25", "pi", "pi/4", "3pi/4" (radians).
double parse_angle(const std::string& text);

/// Rows of flattened records under sorted union columns. Each input is one JSON
/// object or an array of objects.
std::string records_to_csv(const std::vector<std::string>& json_texts);

}  // namespace projlab
