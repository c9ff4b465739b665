#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polaron::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;

/// Subcommands: simulate, compile, transform, feasibility, estimate, spectrum.
/// Writes the declared artifacts, prints a one-line JSON summary to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace polaron::cli
