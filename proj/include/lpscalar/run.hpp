#pragma once

#include <string>

#include "lpscalar/config.hpp"

namespace lpscalar {

/// Process exit statuses.
inline constexpr int kStatusOk = 0;
inline constexpr int kStatusError = 1;      ///< configuration / data errors
inline constexpr int kStatusBlowup = 2;     ///< non-finite state (run halted)
inline constexpr int kStatusExhausted = 3;  ///< resolution-exhausted flag

struct RunResult {
  int status = kStatusOk;
  std::string message;
};

/// Dispatch a validated config: writes CSV/snapshot/report artifacts under
/// config.output_dir. Partial outputs are preserved on blow-up/exhaustion.
RunResult run(const RunConfig& config);

/// Fixed 17-significant-digit decimal rendering used for all CSV numbers.
std::string csv_number(double v);

}  // namespace lpscalar
