#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qseq4 {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (argv without the program name). The default output
/// format is read from QSEQ4_FORMAT when --format is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseq4
