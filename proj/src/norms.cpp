#include "lpscalar/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace lpscalar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic uniform in [0,1) from the raw engine (no distribution
// implementation variance).
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double lq_combine(const std::vector<double>& v, double q) {
  if (q == kInf) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
  }
  if (q == 1.0) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  double s = 0.0;
  for (double x : v) s += std::pow(x, q);
  return std::pow(s, 1.0 / q);
}

// ||Delta_j f||_{L^2} for a block spectrum, via Plancherel (no inverse
// transform needed; exact for band-limited fields).
double block_l2(const SpectralField& block) { return l2_norm(block); }

double block_l2(const SpectralField& b1, const SpectralField& b2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < b1.coeffs.size(); ++i) {
    sum += std::norm(b1.coeffs[i]) + std::norm(b2.coeffs[i]);
  }
  return Grid2D::length() * std::sqrt(sum);
}

NormReport besov_impl(const Grid2D& grid, const BesovParams& prm,
                      const DyadicFamily& fam,
                      const std::function<double(int)>& block_norm) {
  if (prm.p < 1.0) throw parameter_error("besov_norm: p must be >= 1");
  if (prm.q < 1.0) throw parameter_error("besov_norm: q must be >= 1");
  if (!std::isfinite(prm.s)) throw parameter_error("besov_norm: s must be finite");
  NormReport report;
  report.params = prm;
  const int j_top = max_block(grid, fam);
  std::vector<double> weighted;
  for (int j = -1; j <= j_top; ++j) {
    const double w = std::pow(2.0, prm.s * j) * block_norm(j);
    report.per_block.emplace_back(j, w);
    weighted.push_back(w);
  }
  report.total = lq_combine(weighted, prm.q);
  return report;
}

}  // namespace

double conjugate_exponent(double q) {
  if (q < 1.0) throw parameter_error("conjugate_exponent: q must be >= 1");
  if (q == 1.0) return kInf;
  if (q == kInf) return 1.0;
  return q / (q - 1.0);
}

double lp_norm(const PhysicalField& f, double p) {
  if (p < 1.0) throw parameter_error("lp_norm: p must be >= 1");
  if (p == kInf) return max_abs(f);
  const double h = f.grid.spacing();
  const double cell = h * h;
  if (p == 2.0) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(cell * s);
  }
  double s = 0.0;
  for (double v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(cell * s, 1.0 / p);
}

NormReport besov_norm(const SpectralField& f, const BesovParams& prm,
                      const DyadicFamily& fam) {
  if (prm.p == 2.0) {
    return besov_impl(f.grid, prm, fam, [&](int j) {
      return block_l2(dyadic_block(f, j, fam));
    });
  }
  return besov_impl(f.grid, prm, fam, [&](int j) {
    return lp_norm(inverse_transform(dyadic_block(f, j, fam)), prm.p);
  });
}

NormReport besov_norm(const SpectralField& u1, const SpectralField& u2,
                      const BesovParams& prm, const DyadicFamily& fam) {
  if (prm.p == 2.0) {
    return besov_impl(u1.grid, prm, fam, [&](int j) {
      return block_l2(dyadic_block(u1, j, fam), dyadic_block(u2, j, fam));
    });
  }
  return besov_impl(u1.grid, prm, fam, [&](int j) {
    const PhysicalField b1 = inverse_transform(dyadic_block(u1, j, fam));
    const PhysicalField b2 = inverse_transform(dyadic_block(u2, j, fam));
    PhysicalField mag(u1.grid);
    for (std::size_t i = 0; i < mag.values.size(); ++i) {
      const double a = b1.values[i], b = b2.values[i];
      mag.values[i] = std::sqrt(a * a + b * b);
    }
    return lp_norm(mag, prm.p);
  });
}

namespace {

// Shared sampled-sup driver; `gap` maps a pair of node indices to
// |F(x) - F(y)| for the scalar or vector field.
template <typename Gap>
double ll_sup(const Grid2D& grid, double alpha, const PairSampler& sampler,
              const Gap& gap) {
  const int n = grid.n;
  const double h = grid.spacing();
  const double log_h = std::log(h);
  auto quotient = [&](std::size_t a, std::size_t b, double d) {
    const double weight =
        alpha == 0.0 ? d : d * std::pow(1.0 - std::log2(d), alpha);
    return gap(a, b) / weight;
  };
  double best = 0.0;
  // Nearest-neighbor pairs on both axes (the gradient-dominated regime).
  if (h <= 1.0) {
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i1 = 0; i1 < n; ++i1) {
        const std::size_t a = static_cast<std::size_t>(i2) * n + i1;
        const std::size_t b1 = static_cast<std::size_t>(i2) * n + (i1 + 1) % n;
        const std::size_t b2 = static_cast<std::size_t>((i2 + 1) % n) * n + i1;
        best = std::max(best, quotient(a, b1, h));
        best = std::max(best, quotient(a, b2, h));
      }
    }
  }
  // Random pairs: log-uniform separations in [h, 1], random directions,
  // snapped to the lattice.
  std::mt19937_64 rng(sampler.seed);
  for (int k = 0; k < sampler.pair_count; ++k) {
    const int a1 = static_cast<int>(u01(rng) * n) % n;
    const int a2 = static_cast<int>(u01(rng) * n) % n;
    const double rho = std::exp(log_h + u01(rng) * (0.0 - log_h));
    const double angle = 2.0 * std::numbers::pi * u01(rng);
    const int o1 = static_cast<int>(std::lround(rho * std::cos(angle) / h));
    const int o2 = static_cast<int>(std::lround(rho * std::sin(angle) / h));
    if (o1 == 0 && o2 == 0) continue;
    const double d = h * std::sqrt(static_cast<double>(o1) * o1 +
                                   static_cast<double>(o2) * o2);
    if (d > 1.0) continue;
    const std::size_t a = static_cast<std::size_t>(a2) * n + a1;
    const int b1 = ((a1 + o1) % n + n) % n;
    const int b2 = ((a2 + o2) % n + n) % n;
    const std::size_t b = static_cast<std::size_t>(b2) * n + b1;
    best = std::max(best, quotient(a, b, d));
  }
  return best;
}

}  // namespace

double log_lipschitz_norm(const PhysicalField& f, double alpha,
                          const PairSampler& sampler) {
  if (alpha < 0.0 || alpha > 1.0)
    throw parameter_error("log_lipschitz_norm: alpha must be in [0, 1]");
  const double sup = ll_sup(f.grid, alpha, sampler, [&](std::size_t a, std::size_t b) {
    return std::abs(f.values[a] - f.values[b]);
  });
  return max_abs(f) + sup;
}

double log_lipschitz_norm(const PhysicalField& u1, const PhysicalField& u2,
                          double alpha, const PairSampler& sampler) {
  if (alpha < 0.0 || alpha > 1.0)
    throw parameter_error("log_lipschitz_norm: alpha must be in [0, 1]");
  const double sup = ll_sup(u1.grid, alpha, sampler, [&](std::size_t a, std::size_t b) {
    const double d1 = u1.values[a] - u1.values[b];
    const double d2 = u2.values[a] - u2.values[b];
    return std::sqrt(d1 * d1 + d2 * d2);
  });
  double linf = 0.0;
  for (std::size_t i = 0; i < u1.values.size(); ++i) {
    const double a = u1.values[i], b = u2.values[i];
    linf = std::max(linf, std::sqrt(a * a + b * b));
  }
  return linf + sup;
}

}  // namespace lpscalar
