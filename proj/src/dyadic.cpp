#include "lpscalar/dyadic.hpp"

#include <cmath>

namespace lpscalar {

namespace {

double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// C^inf monotone step: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = bump(t);
  const double b = bump(1.0 - t);
  return a / (a + b);
}

constexpr double kInner = 0.75;        // chi == 1 up to here
constexpr double kOuter = 4.0 / 3.0;   // chi == 0 from here on

double partition_sum(const DyadicFamily& fam, double r) {
  double sum = fam.phi_hat(r);
  // psi_hat(2^{-j} r) vanishes exactly once the argument drops to 3/4.
  for (int j = 0; std::ldexp(r, -j) > kInner; ++j) {
    sum += fam.psi_hat(std::ldexp(r, -j));
  }
  return sum;
}

}  // namespace

double DyadicFamily::chi(double r) const {
  return 1.0 - smooth_step((r - kInner) / (kOuter - kInner));
}

DyadicFamily DyadicFamily::build(double tolerance) {
  if (!(tolerance > 0.0)) throw parameter_error("build: tolerance must be > 0");
  DyadicFamily fam;
  // The telescoped sum equals chi(2^{-J-1} r) = 1 analytically; this guards
  // the floating evaluation densely over twenty octaves of radius.
  if (std::abs(partition_sum(fam, 0.0) - 1.0) > tolerance) {
    throw config_error("dyadic family: partition residual above tolerance");
  }
  for (int octave = 0; octave <= 20; ++octave) {
    for (int k = 0; k < 1024; ++k) {
      const double r = std::ldexp(1.0 + k / 1024.0, octave - 2);  // from 1/4 up
      if (std::abs(partition_sum(fam, r) - 1.0) > tolerance) {
        throw config_error("dyadic family: partition residual above tolerance");
      }
    }
  }
  return fam;
}

int max_block(const Grid2D& grid, const DyadicFamily&) {
  const double r_max = grid.max_radius();
  int j = 0;
  while (std::ldexp(kInner, j) <= r_max) ++j;
  return j;
}

SpectralField dyadic_block(const SpectralField& f, int j, const DyadicFamily& fam) {
  if (j <= -2) return SpectralField(f.grid);
  if (j == -1) {
    return apply_symbol(f, Symbol::radial([&fam](double r) { return fam.phi_hat(r); }));
  }
  return apply_symbol(
      f, Symbol::radial([&fam, j](double r) { return fam.psi_hat(std::ldexp(r, -j)); }));
}

SpectralField low_pass(const SpectralField& f, int j, const DyadicFamily& fam) {
  if (j <= -1) return SpectralField(f.grid);
  return apply_symbol(
      f, Symbol::radial([&fam, j](double r) { return fam.phi_hat(std::ldexp(r, -j)); }));
}

}  // namespace lpscalar
