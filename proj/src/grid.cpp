#include "lpscalar/grid.hpp"

#include <cmath>

namespace lpscalar {

namespace {
bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }
}  // namespace

Grid2D::Grid2D(int samples) : n(samples) {
  if (!is_power_of_two(n)) {
    throw config_error("grid size must be a power of two, got " + std::to_string(n));
  }
  if (n < 8) {
    throw config_error("grid size must be >= 8, got " + std::to_string(n));
  }
}

double max_abs(const PhysicalField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(const PhysicalField& f) {
  for (double v : f.values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool all_finite(const SpectralField& f) {
  for (const auto& c : f.coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace lpscalar
