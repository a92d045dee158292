#include "lpscalar/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "lpscalar/transforms.hpp"

namespace lpscalar {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SpectralField make_shear(const InitialData& d, const Grid2D& grid) {
  if (d.shear_k < 1 || 3 * d.shear_k > grid.n) {
    throw config_error("initial.k: shear wave number must be in [1, n/3]");
  }
  SpectralField theta(grid);
  theta.at(d.shear_k, 0) = 0.5 * d.amplitude;
  theta.at(-d.shear_k, 0) = 0.5 * d.amplitude;
  return theta;
}

SpectralField make_random_spectrum(const InitialData& d, const Grid2D& grid) {
  if (d.gamma < 0.0) throw config_error("initial.gamma: must be >= 0");
  const int band = grid.n / 3;
  const int kmax = d.kmax > 0 ? std::min(d.kmax, band) : band;
  if (d.kmin < 1 || d.kmin > kmax) {
    throw config_error("initial.kmin: must be in [1, kmax]");
  }
  SpectralField theta(grid);
  std::mt19937_64 rng(d.seed);
  // Fill one representative per conjugate pair in a canonical order; the
  // mirror coefficient keeps the field real.
  for (int xi2 = -band; xi2 <= band; ++xi2) {
    for (int xi1 = -band; xi1 <= band; ++xi1) {
      const bool canonical = xi2 > 0 || (xi2 == 0 && xi1 > 0);
      if (!canonical) continue;
      const double r = std::sqrt(static_cast<double>(xi1) * xi1 +
                                 static_cast<double>(xi2) * xi2);
      if (r < d.kmin || r > kmax) continue;
      const double phase = 2.0 * std::numbers::pi * u01(rng);
      const std::complex<double> c =
          0.5 * std::pow(r, -d.gamma) *
          std::complex<double>(std::cos(phase), std::sin(phase));
      theta.at(xi1, xi2) = c;
      theta.at(-xi1, -xi2) = std::conj(c);
    }
  }
  const double norm = l2_norm(theta);
  if (norm > 0.0 && d.amplitude > 0.0) {
    const double scale = d.amplitude / norm;
    for (auto& c : theta.coeffs) c *= scale;
  } else {
    for (auto& c : theta.coeffs) c = 0.0;
  }
  return theta;
}

SpectralField make_gaussian_bumps(const InitialData& d, const Grid2D& grid) {
  if (d.bump_count < 2 || d.bump_count % 2 != 0) {
    throw config_error("initial.count: bump count must be even and >= 2");
  }
  if (!(d.bump_width > 0.0)) throw config_error("initial.width: must be > 0");
  const int n = grid.n;
  const double h = grid.spacing();
  const double L = Grid2D::length();
  std::mt19937_64 rng(d.seed);
  std::vector<std::array<double, 3>> bumps;  // (c1, c2, sign)
  for (int b = 0; b < d.bump_count / 2; ++b) {
    const double c1 = u01(rng) * L;
    const double c2 = u01(rng) * L;
    bumps.push_back({c1, c2, 1.0});
    // Antipodal opposite-sign twin keeps the pair mean-balanced.
    bumps.push_back({std::fmod(c1 + 0.5 * L, L), std::fmod(c2 + 0.5 * L, L), -1.0});
  }
  auto min_image = [L](double delta) {
    delta = std::fmod(delta, L);
    if (delta > 0.5 * L) delta -= L;
    if (delta < -0.5 * L) delta += L;
    return delta;
  };
  PhysicalField f(grid);
  const double inv2s2 = 1.0 / (2.0 * d.bump_width * d.bump_width);
  for (int i2 = 0; i2 < n; ++i2) {
    for (int i1 = 0; i1 < n; ++i1) {
      double v = 0.0;
      for (const auto& b : bumps) {
        const double d1 = min_image(i1 * h - b[0]);
        const double d2 = min_image(i2 * h - b[1]);
        v += b[2] * std::exp(-(d1 * d1 + d2 * d2) * inv2s2);
      }
      f.at(i1, i2) = d.amplitude * v;
    }
  }
  SpectralField theta = dealias(forward_transform(f));
  project_mean_zero(theta);
  return theta;
}

}  // namespace

SpectralField generate_initial(const InitialData& d, const Grid2D& grid) {
  if (d.kind == "shear") return make_shear(d, grid);
  if (d.kind == "random-spectrum") return make_random_spectrum(d, grid);
  if (d.kind == "gaussian-bumps") return make_gaussian_bumps(d, grid);
  throw config_error("initial.kind: unknown kind \"" + d.kind +
                     "\" (expected random-spectrum | gaussian-bumps | shear)");
}

}  // namespace lpscalar
