#pragma once

// Test-side oracles. Everything here is deliberately independent of the
// library's transform/convolution code paths: direct O(n^4) DFT summation,
// direct circular convolution, an independent copy of the dyadic cutoff, and
// brute-force pair sampling. Slow on purpose; use small grids.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "lpscalar/grid.hpp"

namespace oracle {

using lpscalar::Grid2D;
using lpscalar::PhysicalField;
using lpscalar::SpectralField;

// Direct DFT: coeffs(xi) = (1/n^2) sum_x f(x) e^{-i xi.x}.
inline SpectralField dft_forward(const PhysicalField& f) {
  const int n = f.grid.n;
  SpectralField F(f.grid);
  for (int k2 = 0; k2 < n; ++k2) {
    const int xi2 = f.grid.wavenumber(k2);
    for (int k1 = 0; k1 < n; ++k1) {
      const int xi1 = f.grid.wavenumber(k1);
      std::complex<double> sum{0.0, 0.0};
      for (int i2 = 0; i2 < n; ++i2) {
        for (int i1 = 0; i1 < n; ++i1) {
          const double phase =
              -2.0 * std::numbers::pi * (static_cast<double>(xi1) * i1 +
                                         static_cast<double>(xi2) * i2) / n;
          sum += f.at(i1, i2) * std::complex<double>(std::cos(phase), std::sin(phase));
        }
      }
      F.coeffs[static_cast<std::size_t>(k2) * n + k1] =
          sum / (static_cast<double>(n) * n);
    }
  }
  return F;
}

// Direct summation inverse: f(x) = sum_xi coeffs(xi) e^{i xi.x}.
inline PhysicalField dft_inverse(const SpectralField& F) {
  const int n = F.grid.n;
  PhysicalField f(F.grid);
  for (int i2 = 0; i2 < n; ++i2) {
    for (int i1 = 0; i1 < n; ++i1) {
      std::complex<double> sum{0.0, 0.0};
      for (int k2 = 0; k2 < n; ++k2) {
        const int xi2 = F.grid.wavenumber(k2);
        for (int k1 = 0; k1 < n; ++k1) {
          const int xi1 = F.grid.wavenumber(k1);
          const double phase =
              2.0 * std::numbers::pi * (static_cast<double>(xi1) * i1 +
                                        static_cast<double>(xi2) * i2) / n;
          sum += F.coeffs[static_cast<std::size_t>(k2) * n + k1] *
                 std::complex<double>(std::cos(phase), std::sin(phase));
        }
      }
      f.at(i1, i2) = sum.real();
    }
  }
  return f;
}

// Independent copy of the dyadic cutoff (classical e^{-1/t} step).
inline double chi_ref(double r) {
  auto g = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double t = (r - 0.75) / (4.0 / 3.0 - 0.75);
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return 1.0 - g(t) / (g(t) + g(1.0 - t));
}
inline double phi_hat_ref(double r) { return chi_ref(r); }
inline double psi_hat_ref(double r) { return chi_ref(0.5 * r) - chi_ref(r); }

// Block multiplier value at a mode, straight from the reference profiles.
inline double block_multiplier_ref(int j, int xi1, int xi2) {
  const double r = std::sqrt(static_cast<double>(xi1) * xi1 +
                             static_cast<double>(xi2) * xi2);
  if (j <= -2) return 0.0;
  if (j == -1) return phi_hat_ref(r);
  return psi_hat_ref(std::ldexp(r, -j));
}
inline double low_pass_multiplier_ref(int j, int xi1, int xi2) {
  if (j <= -1) return 0.0;
  const double r = std::sqrt(static_cast<double>(xi1) * xi1 +
                             static_cast<double>(xi2) * xi2);
  return phi_hat_ref(std::ldexp(r, -j));
}

// Physical-space realization of a multiplier: kernel = direct inverse DFT of
// the multiplier values, then the discrete circular convolution
// (1/n^2) sum_y K(x-y) f(y), which reproduces the multiplier exactly on the
// resolved band.
inline PhysicalField convolve_multiplier(const PhysicalField& f,
                                         const std::vector<double>& multiplier) {
  const int n = f.grid.n;
  SpectralField M(f.grid);
  for (std::size_t i = 0; i < M.coeffs.size(); ++i) M.coeffs[i] = multiplier[i];
  const PhysicalField kernel = dft_inverse(M);
  PhysicalField out(f.grid);
  for (int x2 = 0; x2 < n; ++x2) {
    for (int x1 = 0; x1 < n; ++x1) {
      double sum = 0.0;
      for (int y2 = 0; y2 < n; ++y2) {
        for (int y1 = 0; y1 < n; ++y1) {
          const int d1 = ((x1 - y1) % n + n) % n;
          const int d2 = ((x2 - y2) % n + n) % n;
          sum += kernel.at(d1, d2) * f.at(y1, y2);
        }
      }
      out.at(x1, x2) = sum / (static_cast<double>(n) * n);
    }
  }
  return out;
}

inline std::vector<double> block_multiplier_table(const Grid2D& g, int j) {
  std::vector<double> m(g.size());
  for (int k2 = 0; k2 < g.n; ++k2) {
    for (int k1 = 0; k1 < g.n; ++k1) {
      m[static_cast<std::size_t>(k2) * g.n + k1] =
          block_multiplier_ref(j, g.wavenumber(k1), g.wavenumber(k2));
    }
  }
  return m;
}

inline std::vector<double> low_pass_multiplier_table(const Grid2D& g, int j) {
  std::vector<double> m(g.size());
  for (int k2 = 0; k2 < g.n; ++k2) {
    for (int k1 = 0; k1 < g.n; ++k1) {
      m[static_cast<std::size_t>(k2) * g.n + k1] =
          low_pass_multiplier_ref(j, g.wavenumber(k1), g.wavenumber(k2));
    }
  }
  return m;
}

// Deterministic random helpers shared by the tests.
inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline PhysicalField random_field(const Grid2D& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PhysicalField f(g);
  for (double& v : f.values) v = 2.0 * u01(rng) - 1.0;
  return f;
}

// Smooth band-limited random spectrum with conjugate symmetry, |xi| <= kmax,
// |coeff| ~ |xi|^{-gamma}; independent of the library's generator.
inline SpectralField random_spectrum(const Grid2D& g, std::uint64_t seed,
                                     int kmax, double gamma) {
  SpectralField F(g);
  std::mt19937_64 rng(seed);
  for (int xi2 = -kmax; xi2 <= kmax; ++xi2) {
    for (int xi1 = -kmax; xi1 <= kmax; ++xi1) {
      if (!(xi2 > 0 || (xi2 == 0 && xi1 > 0))) continue;
      const double r = std::sqrt(static_cast<double>(xi1) * xi1 +
                                 static_cast<double>(xi2) * xi2);
      if (r > kmax) continue;
      const double phase = 2.0 * std::numbers::pi * u01(rng);
      const std::complex<double> c =
          0.5 * std::pow(r, -gamma) *
          std::complex<double>(std::cos(phase), std::sin(phase));
      F.at(xi1, xi2) = c;
      F.at(-xi1, -xi2) = std::conj(c);
    }
  }
  return F;
}

// Brute-force grid-pair log-Lipschitz estimate: every nearest-neighbor pair
// plus `pairs` random lattice offsets within unit distance.
inline double ll_dense(const PhysicalField& f, double alpha, int pairs,
                       std::uint64_t seed) {
  const int n = f.grid.n;
  const double h = f.grid.spacing();
  const int reach = static_cast<int>(1.0 / h);
  double best = 0.0;
  auto quotient = [&](int a1, int a2, int o1, int o2) {
    const double d = h * std::sqrt(static_cast<double>(o1) * o1 +
                                   static_cast<double>(o2) * o2);
    if (d <= 0.0 || d > 1.0) return;
    const int b1 = ((a1 + o1) % n + n) % n;
    const int b2 = ((a2 + o2) % n + n) % n;
    const double gap = std::abs(f.at(a1, a2) - f.at(b1, b2));
    best = std::max(best, gap / (d * std::pow(1.0 - std::log2(d), alpha)));
  };
  for (int a2 = 0; a2 < n; ++a2) {
    for (int a1 = 0; a1 < n; ++a1) {
      quotient(a1, a2, 1, 0);
      quotient(a1, a2, 0, 1);
    }
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < pairs; ++k) {
    const int a1 = static_cast<int>(u01(rng) * n) % n;
    const int a2 = static_cast<int>(u01(rng) * n) % n;
    const int o1 = static_cast<int>(u01(rng) * (2 * reach + 1)) - reach;
    const int o2 = static_cast<int>(u01(rng) * (2 * reach + 1)) - reach;
    quotient(a1, a2, o1, o2);
  }
  double linf = 0.0;
  for (double v : f.values) linf = std::max(linf, std::abs(v));
  return linf + best;
}

// Closed-form solution of N' = C N^2: N(t) = N0 / (1 - C N0 t).
inline std::vector<std::pair<double, double>> riccati_series(double n0, double c,
                                                             double t_end,
                                                             int points) {
  std::vector<std::pair<double, double>> series;
  for (int i = 0; i < points; ++i) {
    const double t = t_end * i / (points - 1);
    series.emplace_back(t, n0 / (1.0 - c * n0 * t));
  }
  return series;
}

}  // namespace oracle
