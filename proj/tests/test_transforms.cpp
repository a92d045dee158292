#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lpscalar/transforms.hpp"
#include "support.hpp"

using namespace lpscalar;
using std::numbers::pi;

namespace {

PhysicalField sampled(const Grid2D& g, double (*fn)(double, double)) {
  PhysicalField f(g);
  const double h = g.spacing();
  for (int i2 = 0; i2 < g.n; ++i2) {
    for (int i1 = 0; i1 < g.n; ++i1) f.at(i1, i2) = fn(i1 * h, i2 * h);
  }
  return f;
}

double max_coeff_gap(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
  }
  return m;
}

double max_sample_gap(const PhysicalField& a, const PhysicalField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid2D(100), config_error);
  CHECK_THROWS_AS(Grid2D(0), config_error);
  CHECK_THROWS_AS(Grid2D(-16), config_error);
  CHECK_THROWS_AS(Grid2D(4), config_error);
  const Grid2D g(16);
  CHECK(g.spacing() == doctest::Approx(2.0 * pi / 16));
  CHECK(g.wavenumber(0) == 0);
  CHECK(g.wavenumber(7) == 7);
  CHECK(g.wavenumber(8) == -8);
  CHECK(g.wavenumber(15) == -1);
  CHECK(g.index_of(-1) == 15);
}

TEST_CASE("forward transform: zero field and single mode") {
  const Grid2D g(16);
  const SpectralField zero = forward_transform(PhysicalField(g));
  for (const auto& c : zero.coeffs) CHECK(std::abs(c) == 0.0);

  const auto f = sampled(g, [](double x1, double) { return std::cos(3.0 * x1); });
  const SpectralField F = forward_transform(f);
  for (int i2 = 0; i2 < g.n; ++i2) {
    for (int i1 = 0; i1 < g.n; ++i1) {
      const int xi1 = g.wavenumber(i1);
      const int xi2 = g.wavenumber(i2);
      const auto c = F.coeffs[static_cast<std::size_t>(i2) * g.n + i1];
      if (xi2 == 0 && (xi1 == 3 || xi1 == -3)) {
        CHECK(std::abs(c - 0.5) < 1e-12);
      } else {
        CHECK(std::abs(c) < 1e-12);
      }
    }
  }
}

TEST_CASE("forward transform: non-finite input rejected") {
  const Grid2D g(16);
  PhysicalField f(g);
  f.values[5] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(forward_transform(f), data_error);
}

TEST_CASE("transforms match direct DFT oracles on 8x8 and 16x16") {
  for (int n : {8, 16}) {
    const Grid2D g(n);
    const PhysicalField f = oracle::random_field(g, 42 + n);
    const SpectralField F = forward_transform(f);
    const SpectralField F_ref = oracle::dft_forward(f);
    double scale = 0.0;
    for (const auto& c : F_ref.coeffs) scale = std::max(scale, std::abs(c));
    CHECK(max_coeff_gap(F, F_ref) < 1e-12 * scale);

    const SpectralField S = oracle::random_spectrum(g, 7, n / 3, 1.0);
    const PhysicalField b = inverse_transform(S);
    const PhysicalField b_ref = oracle::dft_inverse(S);
    CHECK(max_sample_gap(b, b_ref) < 1e-12 * std::max(1.0, max_abs(b_ref)));
  }
}

TEST_CASE("inverse transform: single mode and round trip") {
  const Grid2D g(32);
  SpectralField F(g);
  F.at(1, 0) = 0.5;
  F.at(-1, 0) = 0.5;
  const PhysicalField f = inverse_transform(F);
  const auto expect = sampled(g, [](double x1, double) { return std::cos(x1); });
  CHECK(max_sample_gap(f, expect) < 1e-13);

  for (int n : {8, 16, 64}) {
    const Grid2D gg(n);
    const PhysicalField r = oracle::random_field(gg, 3 * n);
    const PhysicalField back = inverse_transform(forward_transform(r));
    CHECK(max_sample_gap(back, r) < 1e-13 * std::max(1.0, max_abs(r)));
  }
}

TEST_CASE("inverse transform: broken conjugate symmetry rejected") {
  const Grid2D g(16);
  SpectralField F(g);
  F.at(2, 1) = {1.0, 0.5};
  F.at(-2, -1) = {1.0, 0.5};  // should be the conjugate
  CHECK(conjugate_asymmetry(F) > 1e-10);
  CHECK_THROWS_AS(inverse_transform(F), data_error);
}

TEST_CASE("Plancherel identity on the grid") {
  for (int n : {16, 64}) {
    const Grid2D g(n);
    const PhysicalField f = oracle::random_field(g, 99 + n);
    const SpectralField F = forward_transform(f);
    double quad = 0.0;
    for (double v : f.values) quad += v * v;
    quad *= g.spacing() * g.spacing();
    double spectral = 0.0;
    for (const auto& c : F.coeffs) spectral += std::norm(c);
    spectral *= Grid2D::length() * Grid2D::length();
    CHECK(std::abs(quad - spectral) < 1e-12 * quad);
  }
}

TEST_CASE("apply_symbol: identity, derivative, negative-order zero mode") {
  const Grid2D g(32);
  const auto f = sampled(g, [](double x1, double) { return std::cos(3.0 * x1); });
  const SpectralField F = forward_transform(f);

  const SpectralField same = apply_symbol(F, Symbol::identity());
  CHECK(max_coeff_gap(same, F) == 0.0);

  const PhysicalField d1 = inverse_transform(apply_symbol(F, Symbol::derivative(0)));
  const auto expect = sampled(g, [](double x1, double) { return -3.0 * std::sin(3.0 * x1); });
  CHECK(max_sample_gap(d1, expect) < 1e-12);

  PhysicalField constant(g);
  for (double& v : constant.values) v = 4.0;
  const SpectralField C = forward_transform(constant);
  const SpectralField out = apply_symbol(C, Symbol::modulus_power(1.5 - 2.0));
  for (const auto& c : out.coeffs) CHECK(std::abs(c) < 1e-15);
}

TEST_CASE("apply_symbol is linear") {
  const Grid2D g(16);
  const SpectralField A = oracle::random_spectrum(g, 1, 5, 1.5);
  const SpectralField B = oracle::random_spectrum(g, 2, 5, 1.5);
  const Symbol m = Symbol::modulus_power(0.7);
  const double alpha = -2.5;
  SpectralField combo(g);
  for (std::size_t i = 0; i < combo.coeffs.size(); ++i) {
    combo.coeffs[i] = alpha * A.coeffs[i] + B.coeffs[i];
  }
  const SpectralField lhs = apply_symbol(combo, m);
  const SpectralField ma = apply_symbol(A, m);
  const SpectralField mb = apply_symbol(B, m);
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) {
    worst = std::max(worst,
                     std::abs(lhs.coeffs[i] - (alpha * ma.coeffs[i] + mb.coeffs[i])));
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("dealias: cutoff semantics and L2 contraction") {
  const Grid2D g(16);
  // Band-limited below n/3 passes through untouched.
  const SpectralField low = oracle::random_spectrum(g, 5, 5, 1.0);
  CHECK(max_coeff_gap(dealias(low), low) == 0.0);

  // A single mode above the cut is annihilated.
  SpectralField high(g);
  high.at(g.n / 2 - 1, 0) = 1.0;
  high.at(-(g.n / 2 - 1), 0) = 1.0;
  const SpectralField cut = dealias(high);
  for (const auto& c : cut.coeffs) CHECK(std::abs(c) == 0.0);

  // Orthogonal projection never grows the L2 norm.
  const PhysicalField f = oracle::random_field(g, 11);
  const SpectralField F = forward_transform(f);
  CHECK(l2_norm(dealias(F)) <= l2_norm(F) * (1.0 + 1e-15));
}

TEST_CASE("mean-zero projection") {
  const Grid2D g(16);
  SpectralField F = oracle::random_spectrum(g, 3, 5, 1.0);
  F.coeffs[0] = {0.3, 0.0};
  project_mean_zero(F);
  CHECK(F.coeffs[0] == std::complex<double>{0.0, 0.0});
}
