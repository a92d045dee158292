#pragma once

#include "lpscalar/grid.hpp"
#include "lpscalar/transforms.hpp"

namespace lpscalar {

/// Smooth dyadic partition of unity on the frequency side.
///
/// chi is a smooth radial cutoff with chi = 1 for r <= 3/4 and chi = 0 for
/// r >= 4/3, built from the classical C^inf step g(t) = e^{-1/t}:
///     S(t) = g(t) / (g(t) + g(1-t)),   chi(r) = 1 - S((r - 3/4) / (4/3 - 3/4)).
/// Then phi_hat = chi and psi_hat(r) = chi(r/2) - chi(r), so
///     supp phi_hat  in { r <= 4/3 },
///     supp psi_hat  in { 3/4 < r < 8/3 },
/// and the partition phi_hat(r) + sum_{j>=0} psi_hat(2^{-j} r) = 1 telescopes
/// exactly to chi(2^{-J-1} r) after J+1 terms.
class DyadicFamily {
 public:
  /// Constructs the family and sweeps the partition-of-unity residual over a
  /// dense set of radii; throws config_error if the residual exceeds
  /// `tolerance` anywhere (it cannot, short of a broken build).
  static DyadicFamily build(double tolerance = 1e-12);

  double chi(double r) const;
  double phi_hat(double r) const { return chi(r); }
  double psi_hat(double r) const { return chi(0.5 * r) - chi(r); }

 private:
  DyadicFamily() = default;
};

/// Largest dyadic index the grid needs: the smallest J with
/// 2^J * (3/4) > max resolved radius. Blocks above J (and J itself) act as
/// zero; the low-pass at J is the identity on resolved modes.
int max_block(const Grid2D& grid, const DyadicFamily& fam);

/// Frequency block Delta_j as an exact Fourier multiplier:
/// j <= -2 -> 0, j = -1 -> phi_hat(|xi|), j >= 0 -> psi_hat(2^{-j}|xi|).
SpectralField dyadic_block(const SpectralField& f, int j, const DyadicFamily& fam);

/// Low-pass S_j = sum of blocks below j: zero for j <= -1, else the
/// multiplier phi_hat(2^{-j}|xi|) (the telescoped partial sum, exactly).
SpectralField low_pass(const SpectralField& f, int j, const DyadicFamily& fam);

}  // namespace lpscalar
