#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpscalar/dyadic.hpp"
#include "lpscalar/evolution.hpp"
#include "lpscalar/norms.hpp"

namespace lpscalar {

/// Randomized suite knobs shared by the inequality checks.
struct VerifySuiteConfig {
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<int> n_list{64, 128};
  std::vector<double> beta_list{1.25, 1.5, 1.75};
  std::vector<double> gamma_list{2.0, 3.0, 4.0};  ///< spectral slopes, cycled by seed
  double p = 2.0;        ///< L^p of the block norms
  double q = 1.0;        ///< summability; q' = conjugate_exponent(q)
  int M = 4;             ///< interaction-width cutoff shift, >= 0
  int pair_budget = 65536;
  double amplitude = 1.0;  ///< L^2 size of the random fields (0 = degenerate suite)

  void validate() const;
};

/// One suite record: a checked inequality instance with its two sides.
/// j is block_none for whole-field rows.
struct VerifyCase {
  static constexpr int block_none = -1000;
  std::uint64_t seed = 0;
  double gamma = 0.0;
  int n = 0;
  double beta = 0.0;
  int j = block_none;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool degenerate = false;  ///< rhs == 0 (lhs must then vanish too)
};

struct VerifyReport {
  std::string label;
  std::vector<VerifyCase> cases;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  std::map<std::string, double> fitted;  ///< named fitted constants / slopes
};

/// || S_{j-1}u . grad Delta_j theta - Delta_j(u . grad theta) ||_{L^p},
/// u = velocity(theta, beta), all products dealiased consistently.
double commutator_residual(const SpectralField& theta, double beta, int j,
                           double p, const DyadicFamily& fam);

/// The commutator bound's right side at unit constant:
/// 2^j * u_ll * sum_{j' >= j-M} 2^{-j'} (j'+1)^{1/q'} ||Delta_j' theta||_{L^p},
/// truncated at the grid's max block; (j'+1)^{1/q'} = 1 when q' = inf.
double commutator_bound_rhs(const SpectralField& theta, double u_ll, int j,
                            double p, double q_prime, int M,
                            const DyadicFamily& fam);

/// Ratio study of the commutator bound over seeds x n x beta and all blocks.
/// fitted carries per-n maxima and the M-sensitivity maxima at M in {2,4,8}.
VerifyReport commutator_suite(const VerifySuiteConfig& cfg);

struct EmbeddingCheck {
  double ll = 0.0;     ///< sampled LL_{1/q'} norm
  double besov = 0.0;  ///< B^{1+2/p}_{p,q} norm (dimension 2: s*p = 2)
  double ratio = 0.0;  ///< ll / besov, 0 by convention when both vanish
};

/// Log-Lipschitz vs critical-Besov comparison for a scalar field.
/// Throws data_error if besov = 0 but ll != 0.
EmbeddingCheck embedding_check(const SpectralField& f, double p, double q,
                               const DyadicFamily& fam, const PairSampler& sampler);

/// Same for a vector field (applied to the velocity in the suite).
EmbeddingCheck embedding_check(const SpectralField& u1, const SpectralField& u2,
                               double p, double q, const DyadicFamily& fam,
                               const PairSampler& sampler);

/// embedding_check(u) over the randomized suite.
VerifyReport embedding_suite(const VerifySuiteConfig& cfg);

struct BernsteinCheck {
  double velocity_norm = 0.0;  ///< ||u||_{B^2_{2,1}}
  double scalar_norm = 0.0;    ///< ||theta||_{B^{1+beta}_{2,1}}
  double ratio = 0.0;
  /// (j, 2^{2j}||Delta_j u||_2 / 2^{j(1+beta)}||Delta_j theta||_2) for blocks
  /// with nonzero denominator.
  std::vector<std::pair<int, double>> per_block;
};

/// The derivative-gain step: ||u||_{B^2_{2,1}} against ||theta||_{B^{1+beta}_{2,1}}.
BernsteinCheck bernstein_check(const SpectralField& theta, double beta,
                               const DyadicFamily& fam);

/// bernstein_check over the randomized suite (whole-field and per-block rows).
VerifyReport bernstein_suite(const VerifySuiteConfig& cfg);

struct GrowthFit {
  double c_fit = 0.0;     ///< max over interior samples of N'(t) / N(t)^2
  double residual = 0.0;  ///< max_t (N - envelope)/N; <= 0 when dominated
};

/// Fit the quadratic growth constant of a norm series and check that the
/// exponential envelope N(0) exp(c_fit * int N) dominates it.
/// Series must have >= 3 points with strictly increasing t.
GrowthFit growth_fit(std::span<const std::pair<double, double>> series);

struct DoublingCase {
  double lambda = 0.0;
  double t_double = 0.0;  ///< first time the Besov norm reaches twice its start
  double product = 0.0;   ///< lambda * t_double
  bool doubled = false;
  bool exhausted = false;  ///< resolution flag tripped before doubling
};

struct ScalingReport {
  std::vector<DoublingCase> cases;
  double slope = 0.0;           ///< log-log slope of t_double vs lambda
  double slope_residual = 0.0;  ///< max |fit - data| in log space
};

/// Evolve lambda * theta0 until the B^{1+beta}_{2,1} norm doubles (or the
/// resolution flag trips, or t exceeds t_cap); the products lambda * t_double
/// are the computable face of the inverse-norm existence-time scaling.
ScalingReport scaling_experiment(const SpectralField& theta0, double beta,
                                 std::span<const double> lambdas,
                                 const ModelParams& params, double t_cap,
                                 int sample_every = 1);

}  // namespace lpscalar
