#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgwb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// Entry point for `kgwb <subcommand> ...`. args[0] is the program name.
// Subcommands: ingest, serve, query, export, demo-data.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgwb::cli
