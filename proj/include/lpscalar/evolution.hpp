#pragma once

#include "lpscalar/grid.hpp"
#include "lpscalar/transforms.hpp"

namespace lpscalar {

/// Model and stepping parameters. beta is accepted on [0, 2]: 0 is 2-D Euler
/// in vorticity form, 1 is non-dissipative SQG; the singular range of
/// interest is (1, 2).
struct ModelParams {
  double beta = 1.5;
  double cfl = 0.5;     ///< in (0, 1]
  double dt_max = 0.1;  ///< > 0

  void validate() const;  ///< throws parameter_error on violation
};

/// The evolving unknown: mean-zero spectral theta at time t.
struct SimState {
  SpectralField theta;
  double t = 0.0;
  ModelParams params;
};

struct VelocityField {
  SpectralField u1, u2;
};

/// Constitutive law u_hat(xi) = -i xi_perp |xi|^{beta-2} theta_hat(xi),
/// xi_perp = (-xi2, xi1), zero at xi = 0. Divergence-free by construction.
/// Throws gauge_error if |theta_hat(0,0)| > 1e-12.
VelocityField velocity(const SpectralField& theta, double beta);

/// Advection right-hand side -dealias(F[u . grad theta]), with the product
/// formed pointwise in physical space from dealiased inputs; zero mean.
/// If tail_fraction is given it receives the L^2 fraction of the raw product
/// removed by the 2/3-rule cut (the under-resolution diagnostic).
SpectralField advect_rhs(const SpectralField& theta, double beta,
                         double* tail_fraction = nullptr);

/// CFL step: min(dt_max, cfl * h / max(||u||_inf, 1e-14)), with ||u||_inf the
/// per-axis max over nodes.
double adaptive_dt(const SimState& state);

/// One classical RK4 step of the dealiased semi-discrete system. Keeps the
/// mean exactly zero. Throws blowup_error if the result is non-finite.
/// max_tail, if given, receives the largest stage tail fraction.
SimState step_rk4(const SimState& state, double dt, double* max_tail = nullptr);

}  // namespace lpscalar
