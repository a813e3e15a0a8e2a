#pragma once

#include <iosfwd>
#include <string>

#include "specgap/config.hpp"

namespace specgap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;  // hypothesis, precision or bound failures

// Runs one subcommand (solve, sweep, fit, check, step-analytic, delta, hf).
// Reports go to `out`, one-line diagnostics to `err`. CSV output goes to
// cfg.out when set, otherwise to `out` (the config echo then goes to `err`).
int run(const std::string& subcommand, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace specgap
