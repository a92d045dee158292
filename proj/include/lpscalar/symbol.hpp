#pragma once

#include <array>
#include <complex>
#include <functional>
#include <utility>

namespace lpscalar {

/// Scalar Fourier multiplier xi -> m(xi). The value at xi = 0 is part of the
/// mapping; negative-order radial symbols declare it explicitly (conventionally
/// 0, the mean-zero gauge).
struct Symbol {
  std::function<std::complex<double>(int, int)> value;

  std::complex<double> operator()(int xi1, int xi2) const { return value(xi1, xi2); }

  static Symbol identity();
  /// i * xi_axis (axis 0 or 1): spectral partial derivative.
  static Symbol derivative(int axis);
  /// |xi|^exponent with the stated value at xi = 0 (default 0).
  static Symbol modulus_power(double exponent, double at_zero = 0.0);
  /// profile(|xi|) for a real radial profile.
  static Symbol radial(std::function<double(double)> profile);
};

/// 2-vector multiplier, for symbols that produce a vector field.
struct VectorSymbol {
  std::function<std::array<std::complex<double>, 2>(int, int)> value;

  std::array<std::complex<double>, 2> operator()(int xi1, int xi2) const {
    return value(xi1, xi2);
  }

  /// (i xi1, i xi2).
  static VectorSymbol gradient();
  /// (-i xi2, i xi1): the perpendicular gradient, divergence-free by construction.
  static VectorSymbol perp_gradient();
};

}  // namespace lpscalar
