#include "lpscalar/evolution.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace lpscalar {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// |xi|^{beta-2} per mode, cached per (n, beta): the velocity multiplier sits
// in every RK stage.
const std::vector<double>& modulus_power_table(const Grid2D& grid, double beta) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(grid.n, beta);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const int n = grid.n;
  std::vector<double> table(grid.size(), 0.0);
  for (int i2 = 0; i2 < n; ++i2) {
    const int xi2 = grid.wavenumber(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const int xi1 = grid.wavenumber(i1);
      if (xi1 == 0 && xi2 == 0) continue;  // mean-zero gauge: value 0
      const double r2 = static_cast<double>(xi1) * xi1 + static_cast<double>(xi2) * xi2;
      table[static_cast<std::size_t>(i2) * n + i1] = std::pow(r2, 0.5 * (beta - 2.0));
    }
  }
  return cache.emplace(key, std::move(table)).first->second;
}

void check_mean_zero(const SpectralField& theta) {
  if (std::abs(theta.coeffs[0]) > 1e-12) {
    throw gauge_error("velocity: theta must be mean-zero (|coeff(0,0)| > 1e-12)");
  }
}

}  // namespace

void ModelParams::validate() const {
  if (!(beta >= 0.0 && beta <= 2.0))
    throw parameter_error("beta must be in [0, 2]");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw parameter_error("cfl must be in (0, 1]");
  if (!(dt_max > 0.0)) throw parameter_error("dt_max must be > 0");
}

VelocityField velocity(const SpectralField& theta, double beta) {
  check_mean_zero(theta);
  const int n = theta.grid.n;
  const auto& table = modulus_power_table(theta.grid, beta);
  VelocityField out{SpectralField(theta.grid), SpectralField(theta.grid)};
  for (int i2 = 0; i2 < n; ++i2) {
    const int xi2 = theta.grid.wavenumber(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const int xi1 = theta.grid.wavenumber(i1);
      const std::size_t idx = static_cast<std::size_t>(i2) * n + i1;
      const std::complex<double> stream = table[idx] * theta.coeffs[idx];
      // u_hat = -i xi_perp |xi|^{beta-2} theta_hat, xi_perp = (-xi2, xi1)
      out.u1.coeffs[idx] = kI * (static_cast<double>(xi2) * stream);
      out.u2.coeffs[idx] = -kI * (static_cast<double>(xi1) * stream);
    }
  }
  return out;
}

SpectralField advect_rhs(const SpectralField& theta, double beta,
                         double* tail_fraction) {
  const SpectralField theta_d = dealias(theta);
  const VelocityField vel = velocity(theta_d, beta);
  const auto [g1, g2] = apply_symbol(theta_d, VectorSymbol::gradient());

  const PhysicalField u1 = inverse_transform(vel.u1);
  const PhysicalField u2 = inverse_transform(vel.u2);
  const PhysicalField t1 = inverse_transform(g1);
  const PhysicalField t2 = inverse_transform(g2);

  PhysicalField product(theta.grid);
  for (std::size_t i = 0; i < product.values.size(); ++i) {
    product.values[i] = u1.values[i] * t1.values[i] + u2.values[i] * t2.values[i];
  }
  SpectralField raw = forward_transform(product);

  if (tail_fraction) {
    double kept = 0.0, cut = 0.0;
    const int n = theta.grid.n;
    for (int i2 = 0; i2 < n; ++i2) {
      const int xi2 = theta.grid.wavenumber(i2);
      for (int i1 = 0; i1 < n; ++i1) {
        const int xi1 = theta.grid.wavenumber(i1);
        const double e = std::norm(raw.coeffs[static_cast<std::size_t>(i2) * n + i1]);
        if (in_dealias_band(theta.grid, xi1, xi2)) kept += e;
        else cut += e;
      }
    }
    const double total = kept + cut;
    *tail_fraction = total > 0.0 ? std::sqrt(cut / total) : 0.0;
  }

  SpectralField rhs = dealias(raw);
  for (auto& c : rhs.coeffs) c = -c;
  project_mean_zero(rhs);
  return rhs;
}

double adaptive_dt(const SimState& state) {
  state.params.validate();
  const VelocityField vel = velocity(state.theta, state.params.beta);
  const double umax =
      std::max(max_abs(inverse_transform(vel.u1)), max_abs(inverse_transform(vel.u2)));
  const double h = state.theta.grid.spacing();
  return std::min(state.params.dt_max,
                  state.params.cfl * h / std::max(umax, 1e-14));
}

SimState step_rk4(const SimState& state, double dt, double* max_tail) {
  if (!(dt > 0.0)) throw parameter_error("step_rk4: dt must be > 0");
  const double beta = state.params.beta;
  const std::size_t count = state.theta.coeffs.size();
  double tail = 0.0;
  double stage_tail = 0.0;

  auto rhs = [&](const SpectralField& th) {
    SpectralField r = advect_rhs(th, beta, &stage_tail);
    tail = std::max(tail, stage_tail);
    return r;
  };
  auto axpy = [&](const SpectralField& th, double a, const SpectralField& k) {
    SpectralField out = th;
    for (std::size_t i = 0; i < count; ++i) out.coeffs[i] += a * k.coeffs[i];
    return out;
  };

  const SpectralField k1 = rhs(state.theta);
  const SpectralField k2 = rhs(axpy(state.theta, 0.5 * dt, k1));
  const SpectralField k3 = rhs(axpy(state.theta, 0.5 * dt, k2));
  const SpectralField k4 = rhs(axpy(state.theta, dt, k3));

  SimState next{SpectralField(state.theta.grid), state.t + dt, state.params};
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < count; ++i) {
    next.theta.coeffs[i] =
        state.theta.coeffs[i] +
        w * (k1.coeffs[i] + 2.0 * k2.coeffs[i] + 2.0 * k3.coeffs[i] + k4.coeffs[i]);
  }
  project_mean_zero(next.theta);
  if (!all_finite(next.theta)) {
    throw blowup_error("step_rk4: state became non-finite (blow-up signal)");
  }
  if (max_tail) *max_tail = tail;
  return next;
}

}  // namespace lpscalar
