#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pelltrib::cli {

enum ExitCode : int { kOk = 0, kDiscrepancy = 1, kUsage = 2 };

// Every PELLTRIB_<FLAG> variable (PELLTRIB_PRECISION_BITS, PELLTRIB_JOBS, ...)
// stands in for the flag when it is not given on the command line.
inline constexpr const char* kEnvPrefix = "PELLTRIB_";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pelltrib::cli
