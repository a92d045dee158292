#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lpscalar/dyadic.hpp"
#include "lpscalar/grid.hpp"

namespace lpscalar {

/// Conjugate exponent: 1/q + 1/q' = 1, with 1 <-> inf.
/// Throws parameter_error for q < 1.
double conjugate_exponent(double q);

/// Rectangle-rule L^p norm on the grid; p = inf gives max |sample|.
/// Exact for L^2 of band-limited fields (Plancherel). Throws parameter_error
/// for p < 1.
double lp_norm(const PhysicalField& f, double p);

struct BesovParams {
  double s = 0.0;  ///< smoothness
  double p = 2.0;  ///< integrability in [1, inf]
  double q = 1.0;  ///< summability in [1, inf]
};

/// Per-block Besov data: total = l^q over j of 2^{js} ||Delta_j f||_{L^p}.
struct NormReport {
  double total = 0.0;
  std::vector<std::pair<int, double>> per_block;  ///< (j, 2^{js}||Delta_j f||_p)
  BesovParams params;
};

NormReport besov_norm(const SpectralField& f, const BesovParams& prm,
                      const DyadicFamily& fam);

/// Vector-field variant: block norms use the pointwise Euclidean magnitude
/// (for p = 2 this is the usual componentwise sum of squares).
NormReport besov_norm(const SpectralField& u1, const SpectralField& u2,
                      const BesovParams& prm, const DyadicFamily& fam);

/// Deterministic pair budget for the sampled log-Lipschitz sup.
/// The sampler always includes every nearest-neighbor grid pair (both axes)
/// and adds `pair_count` random pairs: anchors uniform on the grid,
/// separations log-uniform in [h, 1] along random directions, snapped to the
/// lattice. The estimate is a lower bound of the continuum sup and is
/// monotone in pair_count (the random pairs form a prefix stream).
struct PairSampler {
  std::uint64_t seed = 0;
  int pair_count = 65536;
};

/// ||f||_{L^inf} + sampled sup of |f(x)-f(y)| / (|x-y| (1 - log2|x-y|)^alpha)
/// over pairs with 0 < |x-y| <= 1 (min-image torus distance).
/// Throws parameter_error for alpha outside [0, 1].
double log_lipschitz_norm(const PhysicalField& f, double alpha,
                          const PairSampler& sampler);

/// Vector-field variant (Euclidean magnitude pointwise).
double log_lipschitz_norm(const PhysicalField& u1, const PhysicalField& u2,
                          double alpha, const PairSampler& sampler);

}  // namespace lpscalar
