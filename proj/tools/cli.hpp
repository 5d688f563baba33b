#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hullselect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hullselect::cli
