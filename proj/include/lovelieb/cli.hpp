#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lovelieb/core.hpp"
#include "lovelieb/csv.hpp"
#include "lovelieb/observables.hpp"

namespace lovelieb {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitNumerical = 1, kExitUsage = 2 };

/// Runs the tool with `args` (without the program name). Tables go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// one | x | poly:c0,c1,... | hulthen | qwell:<beta>
RhsSpec parse_rhs(const std::string& text);
Sign parse_sign(const std::string& text);

/// Figure data: 1 (minus, g = 1, alpha = 0.1), 2 (plus, g = 1, alpha = 0.1),
/// 3 (u(1; alpha) sweep with the power fit), 4 (minus, g = x, alpha = 0.1).
OutputTable figure_table(int id);

/// Solver used for the endpoint sweep of figure 3.
SolverConfig endpoint_sweep_config();

}  // namespace lovelieb
