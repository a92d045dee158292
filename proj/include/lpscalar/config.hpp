#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lpscalar/initial_data.hpp"
#include "lpscalar/norms.hpp"
#include "lpscalar/verify.hpp"

namespace lpscalar {

enum class RunMode {
  simulate,
  norms,
  verify_commutator,
  verify_embedding,
  verify_bernstein,
  scaling,
};

RunMode parse_mode(const std::string& name);  ///< throws config_error
std::string mode_name(RunMode mode);

/// Fully validated run configuration. Unknown keys are rejected; every value
/// is range-checked before any solver sees it.
struct RunConfig {
  RunMode mode = RunMode::simulate;
  int n = 128;          ///< power of two, >= 16
  double beta = 1.5;    ///< [0, 2]
  double t_end = 1.0;   ///< > 0
  double cfl = 0.5;     ///< (0, 1]
  double dt_max = 0.1;  ///< > 0
  int save_every = 1;   ///< >= 1 steps per CSV row / snapshot
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  std::string snapshot_in;  ///< norms mode input

  InitialData initial;
  BesovParams norm{2.5, 2.0, 1.0};  ///< norms-mode parameters (s, p, q)
  VerifySuiteConfig verify;
  std::vector<double> lambdas{1.0, 2.0, 4.0, 8.0};  ///< scaling mode
};

/// Parse + validate a JSON config file.
/// Throws config_error naming the offending key on any violation.
RunConfig load_config(const std::filesystem::path& path);

/// Same, but applies "key=value" overrides (dotted paths, e.g.
/// "initial.kind=shear") after the file parse and before validation.
RunConfig load_config(const std::filesystem::path& path,
                      const std::vector<std::string>& overrides);

/// Parse + validate from a JSON string (used by tests and load_config).
RunConfig parse_config(const std::string& json_text,
                       const std::vector<std::string>& overrides = {});

}  // namespace lpscalar
