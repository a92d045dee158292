#include "lpscalar/symbol.hpp"

#include <cmath>

namespace lpscalar {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

Symbol Symbol::identity() {
  return {[](int, int) { return std::complex<double>{1.0, 0.0}; }};
}

Symbol Symbol::derivative(int axis) {
  return {[axis](int xi1, int xi2) {
    return kI * static_cast<double>(axis == 0 ? xi1 : xi2);
  }};
}

Symbol Symbol::modulus_power(double exponent, double at_zero) {
  return {[exponent, at_zero](int xi1, int xi2) -> std::complex<double> {
    if (xi1 == 0 && xi2 == 0) return at_zero;
    const double r2 = static_cast<double>(xi1) * xi1 + static_cast<double>(xi2) * xi2;
    return std::pow(r2, 0.5 * exponent);
  }};
}

Symbol Symbol::radial(std::function<double(double)> profile) {
  return {[profile = std::move(profile)](int xi1, int xi2) -> std::complex<double> {
    const double r = std::sqrt(static_cast<double>(xi1) * xi1 +
                               static_cast<double>(xi2) * xi2);
    return profile(r);
  }};
}

VectorSymbol VectorSymbol::gradient() {
  return {[](int xi1, int xi2) {
    return std::array<std::complex<double>, 2>{kI * static_cast<double>(xi1),
                                               kI * static_cast<double>(xi2)};
  }};
}

VectorSymbol VectorSymbol::perp_gradient() {
  return {[](int xi1, int xi2) {
    return std::array<std::complex<double>, 2>{-kI * static_cast<double>(xi2),
                                               kI * static_cast<double>(xi1)};
  }};
}

}  // namespace lpscalar
