#include "lpscalar/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace lpscalar {

namespace {

// Plans are cached per grid size and executed through the new-array interface
// on per-call fftw_malloc'd buffers (same alignment class as the planning
// buffers). Planning is serialized; execution is thread-safe on distinct
// buffers.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  fftw_complex* planning_in = nullptr;
  fftw_complex* planning_out = nullptr;
};

PlanPair& plans_for(int n) {
  static std::mutex mu;
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PlanPair p;
  const std::size_t count = static_cast<std::size_t>(n) * n;
  p.planning_in = fftw_alloc_complex(count);
  p.planning_out = fftw_alloc_complex(count);
  p.forward = fftw_plan_dft_2d(n, n, p.planning_in, p.planning_out,
                               FFTW_FORWARD, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_2d(n, n, p.planning_in, p.planning_out,
                                FFTW_BACKWARD, FFTW_ESTIMATE);
  return cache.emplace(n, p).first->second;
}

struct FftwBuffer {
  fftw_complex* data = nullptr;
  explicit FftwBuffer(std::size_t count) : data(fftw_alloc_complex(count)) {}
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  if (!all_finite(f)) throw data_error("forward transform: non-finite sample");
  const int n = f.grid.n;
  const std::size_t count = f.grid.size();
  PlanPair& plans = plans_for(n);
  FftwBuffer in(count), out(count);
  for (std::size_t i = 0; i < count; ++i) {
    in.data[i][0] = f.values[i];
    in.data[i][1] = 0.0;
  }
  fftw_execute_dft(plans.forward, in.data, out.data);
  SpectralField F(f.grid);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (std::size_t i = 0; i < count; ++i) {
    F.coeffs[i] = {out.data[i][0] * scale, out.data[i][1] * scale};
  }
  return F;
}

double conjugate_asymmetry(const SpectralField& F) {
  const int n = F.grid.n;
  double worst = 0.0;
  double scale = 0.0;
  for (int i2 = 0; i2 < n; ++i2) {
    const int m2 = i2 == 0 ? 0 : n - i2;
    for (int i1 = 0; i1 < n; ++i1) {
      const int m1 = i1 == 0 ? 0 : n - i1;
      const auto c = F.coeffs[static_cast<std::size_t>(i2) * n + i1];
      const auto cm = F.coeffs[static_cast<std::size_t>(m2) * n + m1];
      worst = std::max(worst, std::abs(cm - std::conj(c)));
      scale = std::max(scale, std::abs(c));
    }
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

PhysicalField inverse_transform(const SpectralField& F) {
  if (!all_finite(F)) throw data_error("inverse transform: non-finite coefficient");
  if (conjugate_asymmetry(F) > 1e-10) {
    throw data_error("inverse transform: conjugate symmetry broken beyond 1e-10");
  }
  const int n = F.grid.n;
  const std::size_t count = F.grid.size();
  PlanPair& plans = plans_for(n);
  FftwBuffer in(count), out(count);
  for (std::size_t i = 0; i < count; ++i) {
    in.data[i][0] = F.coeffs[i].real();
    in.data[i][1] = F.coeffs[i].imag();
  }
  fftw_execute_dft(plans.backward, in.data, out.data);
  PhysicalField f(F.grid);
  for (std::size_t i = 0; i < count; ++i) f.values[i] = out.data[i][0];
  return f;
}

SpectralField apply_symbol(const SpectralField& F, const Symbol& m) {
  const int n = F.grid.n;
  SpectralField out(F.grid);
  for (int i2 = 0; i2 < n; ++i2) {
    const int xi2 = F.grid.wavenumber(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const int xi1 = F.grid.wavenumber(i1);
      const std::complex<double> v = m(xi1, xi2);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw data_error("apply_symbol: symbol non-finite at resolved mode");
      }
      const std::size_t idx = static_cast<std::size_t>(i2) * n + i1;
      out.coeffs[idx] = v * F.coeffs[idx];
    }
  }
  return out;
}

std::pair<SpectralField, SpectralField> apply_symbol(const SpectralField& F,
                                                     const VectorSymbol& m) {
  const int n = F.grid.n;
  std::pair<SpectralField, SpectralField> out{SpectralField(F.grid),
                                              SpectralField(F.grid)};
  for (int i2 = 0; i2 < n; ++i2) {
    const int xi2 = F.grid.wavenumber(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const int xi1 = F.grid.wavenumber(i1);
      const auto v = m(xi1, xi2);
      for (const auto& c : v) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
          throw data_error("apply_symbol: symbol non-finite at resolved mode");
        }
      }
      const std::size_t idx = static_cast<std::size_t>(i2) * n + i1;
      out.first.coeffs[idx] = v[0] * F.coeffs[idx];
      out.second.coeffs[idx] = v[1] * F.coeffs[idx];
    }
  }
  return out;
}

bool in_dealias_band(const Grid2D& g, int xi1, int xi2) {
  return 3 * std::abs(xi1) <= g.n && 3 * std::abs(xi2) <= g.n;
}

SpectralField dealias(const SpectralField& F) {
  const int n = F.grid.n;
  SpectralField out(F.grid);
  for (int i2 = 0; i2 < n; ++i2) {
    const int xi2 = F.grid.wavenumber(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const int xi1 = F.grid.wavenumber(i1);
      const std::size_t idx = static_cast<std::size_t>(i2) * n + i1;
      if (in_dealias_band(F.grid, xi1, xi2)) out.coeffs[idx] = F.coeffs[idx];
    }
  }
  return out;
}

double l2_norm(const SpectralField& F) {
  double sum = 0.0;
  for (const auto& c : F.coeffs) sum += std::norm(c);
  return Grid2D::length() * std::sqrt(sum);
}

void project_mean_zero(SpectralField& F) { F.coeffs[0] = {0.0, 0.0}; }

}  // namespace lpscalar
