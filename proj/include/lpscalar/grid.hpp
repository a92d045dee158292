#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lpscalar/errors.hpp"

namespace lpscalar {

/// Uniform n x n sampling of the periodic square [0, 2*pi)^2.
/// Resolved integer wave numbers per axis are [-n/2, n/2).
struct Grid2D {
  int n = 0;

  explicit Grid2D(int samples);

  static constexpr double length() { return 2.0 * std::numbers::pi; }
  double spacing() const { return length() / n; }
  std::size_t size() const { return static_cast<std::size_t>(n) * n; }

  /// Storage index (0..n-1) along one axis -> signed wave number.
  int wavenumber(int index) const { return index < n / 2 ? index : index - n; }
  /// Signed wave number in [-n/2, n/2) -> storage index.
  int index_of(int wavenumber) const { return wavenumber >= 0 ? wavenumber : wavenumber + n; }
  /// Radius of the outermost resolved mode, |(-n/2, -n/2)|.
  double max_radius() const { return (n / 2) * std::numbers::sqrt2; }

  bool operator==(const Grid2D&) const = default;
};

/// Real scalar samples, one per node, row-major: values[i2 * n + i1] is the
/// sample at (i1 * h, i2 * h).
struct PhysicalField {
  Grid2D grid;
  std::vector<double> values;

  explicit PhysicalField(const Grid2D& g) : grid(g), values(g.size(), 0.0) {}

  double& at(int i1, int i2) { return values[static_cast<std::size_t>(i2) * grid.n + i1]; }
  double at(int i1, int i2) const { return values[static_cast<std::size_t>(i2) * grid.n + i1]; }
};

/// Complex Fourier coefficients, normalized so f(x) = sum_xi coeffs(xi) e^{i xi.x}.
/// Storage mirrors the grid: coeffs[index_of(xi2) * n + index_of(xi1)].
struct SpectralField {
  Grid2D grid;
  std::vector<std::complex<double>> coeffs;

  explicit SpectralField(const Grid2D& g) : grid(g), coeffs(g.size(), {0.0, 0.0}) {}

  std::complex<double>& at(int xi1, int xi2) {
    return coeffs[static_cast<std::size_t>(grid.index_of(xi2)) * grid.n + grid.index_of(xi1)];
  }
  std::complex<double> at(int xi1, int xi2) const {
    return coeffs[static_cast<std::size_t>(grid.index_of(xi2)) * grid.n + grid.index_of(xi1)];
  }
};

/// Max |sample|.
double max_abs(const PhysicalField& f);

/// True if every sample is finite.
bool all_finite(const PhysicalField& f);
bool all_finite(const SpectralField& f);

}  // namespace lpscalar
