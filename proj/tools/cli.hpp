#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace border3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitOverflow = 3;

// Runs one command (args exclude the program name). Results go to `out` as
// JSON, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace border3::cli
