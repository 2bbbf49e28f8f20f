#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgc::cli {

// Exit statuses of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;  // invalid certificate, unmet precondition, failed check
inline constexpr int exit_usage = 2;    // bad arguments, unreadable or malformed input
inline constexpr int exit_internal = 3; // a construction failed its own re-verification

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sgc::cli
