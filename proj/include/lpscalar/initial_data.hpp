#pragma once

#include <cstdint>
#include <string>

#include "lpscalar/grid.hpp"

namespace lpscalar {

/// Initial-condition recipe. Every kind yields a mean-zero, conjugate
/// symmetric spectrum band-limited below n/3, deterministic in
/// (kind, parameters, seed, n).
struct InitialData {
  std::string kind = "random-spectrum";  ///< random-spectrum | gaussian-bumps | shear
  std::uint64_t seed = 0;

  // random-spectrum: |theta_hat(xi)| ~ |xi|^{-gamma} with random phases for
  // kmin <= |xi| <= kmax (kmax = 0 means the full dealias band), rescaled to
  // ||theta||_{L^2} = amplitude.
  double gamma = 3.0;
  int kmin = 1;
  int kmax = 0;

  // shear: theta = amplitude * cos(k * x1), an exact steady state.
  int shear_k = 3;

  // gaussian-bumps: `count` periodized Gaussian bumps of width `width`,
  // placed as antipodal opposite-sign pairs (seeded centers).
  int bump_count = 2;
  double bump_width = 0.6;

  double amplitude = 1.0;
};

/// Throws config_error on an unknown kind or out-of-range parameters.
SpectralField generate_initial(const InitialData& data, const Grid2D& grid);

}  // namespace lpscalar
