#pragma once

#include <ostream>

namespace jw::cli {

/// Exit codes: 0 pass, 1 a check failed, 2 usage or parse error, 3 infeasible.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jw::cli
