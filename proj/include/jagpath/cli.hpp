#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jagpath {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jagpath
