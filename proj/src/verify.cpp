#include "lpscalar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "lpscalar/initial_data.hpp"
#include "lpscalar/threading.hpp"

namespace lpscalar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Deterministic parallel map over case indices: results land in
// caller-indexed slots, so scheduling cannot reorder anything.
void parallel_cases(std::size_t count, const std::function<void(std::size_t)>& work) {
  const int threads = std::min<int>(thread_budget(), static_cast<int>(count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        work(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

struct SuiteCaseKey {
  std::uint64_t seed;
  double gamma;
  int n;
  double beta;
};

std::vector<SuiteCaseKey> suite_cases(const VerifySuiteConfig& cfg) {
  std::vector<SuiteCaseKey> keys;
  for (std::size_t si = 0; si < cfg.seeds.size(); ++si) {
    const double gamma = cfg.gamma_list[si % cfg.gamma_list.size()];
    for (int n : cfg.n_list) {
      for (double beta : cfg.beta_list) {
        keys.push_back({cfg.seeds[si], gamma, n, beta});
      }
    }
  }
  return keys;
}

SpectralField suite_field(const VerifySuiteConfig& cfg, const SuiteCaseKey& key) {
  InitialData d;
  d.kind = "random-spectrum";
  d.seed = key.seed;
  d.gamma = key.gamma;
  d.amplitude = cfg.amplitude;
  return generate_initial(d, Grid2D(key.n));
}

void finish_report(VerifyReport& report) {
  std::vector<double> ratios;
  for (const auto& c : report.cases) {
    if (!c.degenerate) ratios.push_back(c.ratio);
  }
  report.max_ratio = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
  report.median_ratio = median(std::move(ratios));
}

void record_per_n_maxima(VerifyReport& report) {
  for (const auto& c : report.cases) {
    if (c.degenerate) continue;
    auto& slot = report.fitted["max_ratio@n=" + std::to_string(c.n)];
    slot = std::max(slot, c.ratio);
  }
}

}  // namespace

void VerifySuiteConfig::validate() const {
  if (seeds.empty()) throw parameter_error("verify.seeds: must be nonempty");
  if (n_list.empty()) throw parameter_error("verify.n_list: must be nonempty");
  for (int n : n_list) {
    if (n < 8 || (n & (n - 1)) != 0)
      throw parameter_error("verify.n_list: entries must be powers of two >= 8");
  }
  if (beta_list.empty()) throw parameter_error("verify.beta_list: must be nonempty");
  for (double b : beta_list) {
    if (!(b >= 0.0 && b <= 2.0))
      throw parameter_error("verify.beta_list: entries must be in [0, 2]");
  }
  if (gamma_list.empty()) throw parameter_error("verify.gamma_list: must be nonempty");
  if (p < 1.0) throw parameter_error("verify.p: must be >= 1");
  if (q < 1.0) throw parameter_error("verify.q: must be >= 1");
  if (M < 0) throw parameter_error("verify.M: must be >= 0");
  if (pair_budget < 0) throw parameter_error("verify.pair_budget: must be >= 0");
  if (amplitude < 0.0) throw parameter_error("verify.amplitude: must be >= 0");
}

double commutator_residual(const SpectralField& theta, double beta, int j,
                           double p, const DyadicFamily& fam) {
  if (p < 1.0) throw parameter_error("commutator_residual: p must be >= 1");
  const SpectralField theta_d = dealias(theta);
  const VelocityField vel = velocity(theta_d, beta);

  // S_{j-1} u . grad Delta_j theta
  const PhysicalField lp1 = inverse_transform(low_pass(vel.u1, j - 1, fam));
  const PhysicalField lp2 = inverse_transform(low_pass(vel.u2, j - 1, fam));
  const auto [b1, b2] = apply_symbol(dyadic_block(theta_d, j, fam), VectorSymbol::gradient());
  const PhysicalField db1 = inverse_transform(b1);
  const PhysicalField db2 = inverse_transform(b2);
  PhysicalField prod(theta.grid);
  for (std::size_t i = 0; i < prod.values.size(); ++i) {
    prod.values[i] = lp1.values[i] * db1.values[i] + lp2.values[i] * db2.values[i];
  }
  const SpectralField term_a = dealias(forward_transform(prod));

  // Delta_j (u . grad theta)
  const auto [g1, g2] = apply_symbol(theta_d, VectorSymbol::gradient());
  const PhysicalField u1 = inverse_transform(vel.u1);
  const PhysicalField u2 = inverse_transform(vel.u2);
  const PhysicalField t1 = inverse_transform(g1);
  const PhysicalField t2 = inverse_transform(g2);
  for (std::size_t i = 0; i < prod.values.size(); ++i) {
    prod.values[i] = u1.values[i] * t1.values[i] + u2.values[i] * t2.values[i];
  }
  const SpectralField term_b = dyadic_block(dealias(forward_transform(prod)), j, fam);

  SpectralField diff = term_a;
  for (std::size_t i = 0; i < diff.coeffs.size(); ++i) {
    diff.coeffs[i] -= term_b.coeffs[i];
  }
  return lp_norm(inverse_transform(diff), p);
}

double commutator_bound_rhs(const SpectralField& theta, double u_ll, int j,
                            double p, double q_prime, int M,
                            const DyadicFamily& fam) {
  if (p < 1.0) throw parameter_error("commutator_bound_rhs: p must be >= 1");
  if (q_prime < 1.0) throw parameter_error("commutator_bound_rhs: q' must be >= 1");
  if (M < 0) throw parameter_error("commutator_bound_rhs: M must be >= 0");
  if (u_ll < 0.0) throw parameter_error("commutator_bound_rhs: u_ll must be >= 0");
  const SpectralField theta_d = dealias(theta);
  const double inv_qp = q_prime == kInf ? 0.0 : 1.0 / q_prime;
  const int j_top = max_block(theta.grid, fam);
  double sum = 0.0;
  for (int jp = std::max(j - M, -1); jp <= j_top; ++jp) {
    const double block_norm =
        p == 2.0 ? l2_norm(dyadic_block(theta_d, jp, fam))
                 : lp_norm(inverse_transform(dyadic_block(theta_d, jp, fam)), p);
    sum += std::ldexp(1.0, -jp) * std::pow(jp + 1.0, inv_qp) * block_norm;
  }
  return std::ldexp(1.0, j) * u_ll * sum;
}

VerifyReport commutator_suite(const VerifySuiteConfig& cfg) {
  cfg.validate();
  const DyadicFamily fam = DyadicFamily::build();
  const double q_prime = conjugate_exponent(cfg.q);
  const double alpha = q_prime == kInf ? 0.0 : 1.0 / q_prime;
  const std::vector<SuiteCaseKey> keys = suite_cases(cfg);
  const std::vector<int> m_probes{2, 4, 8};

  struct CaseOut {
    std::vector<VerifyCase> rows;
    std::array<double, 3> max_ratio_by_m{0.0, 0.0, 0.0};
  };
  std::vector<CaseOut> outs(keys.size());

  parallel_cases(keys.size(), [&](std::size_t ci) {
    const SuiteCaseKey& key = keys[ci];
    const Grid2D grid(key.n);
    const SpectralField theta = suite_field(cfg, key);
    const VelocityField vel = velocity(theta, key.beta);
    const double u_ll =
        log_lipschitz_norm(inverse_transform(vel.u1), inverse_transform(vel.u2),
                           alpha, PairSampler{key.seed, cfg.pair_budget});
    CaseOut& out = outs[ci];
    for (int j = -1; j <= max_block(grid, fam); ++j) {
      const double lhs = commutator_residual(theta, key.beta, j, cfg.p, fam);
      const double rhs =
          commutator_bound_rhs(theta, u_ll, j, cfg.p, q_prime, cfg.M, fam);
      VerifyCase row{key.seed, key.gamma, key.n, key.beta, j,
                     lhs,      rhs,       rhs > 0.0 ? lhs / rhs : 0.0,
                     rhs == 0.0};
      out.rows.push_back(row);
      for (std::size_t mi = 0; mi < m_probes.size(); ++mi) {
        const double rm =
            commutator_bound_rhs(theta, u_ll, j, cfg.p, q_prime, m_probes[mi], fam);
        if (rm > 0.0) {
          out.max_ratio_by_m[mi] = std::max(out.max_ratio_by_m[mi], lhs / rm);
        }
      }
    }
  });

  VerifyReport report;
  report.label = "commutator";
  std::array<double, 3> m_maxima{0.0, 0.0, 0.0};
  for (const auto& out : outs) {
    report.cases.insert(report.cases.end(), out.rows.begin(), out.rows.end());
    for (std::size_t mi = 0; mi < m_probes.size(); ++mi) {
      m_maxima[mi] = std::max(m_maxima[mi], out.max_ratio_by_m[mi]);
    }
  }
  finish_report(report);
  record_per_n_maxima(report);
  for (std::size_t mi = 0; mi < m_probes.size(); ++mi) {
    report.fitted["max_ratio@M=" + std::to_string(m_probes[mi])] = m_maxima[mi];
  }
  return report;
}

namespace {

EmbeddingCheck embedding_from(double ll, double besov) {
  if (besov == 0.0 && ll != 0.0) {
    throw data_error("embedding_check: zero Besov norm with nonzero LL norm");
  }
  return {ll, besov, besov > 0.0 ? ll / besov : 0.0};
}

}  // namespace

EmbeddingCheck embedding_check(const SpectralField& f, double p, double q,
                               const DyadicFamily& fam, const PairSampler& sampler) {
  const double q_prime = conjugate_exponent(q);
  const double alpha = q_prime == kInf ? 0.0 : 1.0 / q_prime;
  const double s = p == kInf ? 0.0 : 2.0 / p;  // s p = 2 (dimension)
  const double ll = log_lipschitz_norm(inverse_transform(f), alpha, sampler);
  const double bn = besov_norm(f, BesovParams{1.0 + s, p, q}, fam).total;
  return embedding_from(ll, bn);
}

EmbeddingCheck embedding_check(const SpectralField& u1, const SpectralField& u2,
                               double p, double q, const DyadicFamily& fam,
                               const PairSampler& sampler) {
  const double q_prime = conjugate_exponent(q);
  const double alpha = q_prime == kInf ? 0.0 : 1.0 / q_prime;
  const double s = p == kInf ? 0.0 : 2.0 / p;
  const double ll = log_lipschitz_norm(inverse_transform(u1), inverse_transform(u2),
                                       alpha, sampler);
  const double bn = besov_norm(u1, u2, BesovParams{1.0 + s, p, q}, fam).total;
  return embedding_from(ll, bn);
}

VerifyReport embedding_suite(const VerifySuiteConfig& cfg) {
  cfg.validate();
  const DyadicFamily fam = DyadicFamily::build();
  const std::vector<SuiteCaseKey> keys = suite_cases(cfg);
  std::vector<VerifyCase> rows(keys.size());

  parallel_cases(keys.size(), [&](std::size_t ci) {
    const SuiteCaseKey& key = keys[ci];
    const SpectralField theta = suite_field(cfg, key);
    const VelocityField vel = velocity(theta, key.beta);
    const EmbeddingCheck chk =
        embedding_check(vel.u1, vel.u2, cfg.p, cfg.q, fam,
                        PairSampler{key.seed, cfg.pair_budget});
    rows[ci] = VerifyCase{key.seed, key.gamma,  key.n,
                          key.beta, VerifyCase::block_none,
                          chk.ll,   chk.besov,  chk.ratio,
                          chk.besov == 0.0};
  });

  VerifyReport report;
  report.label = "embedding";
  report.cases = std::move(rows);
  finish_report(report);
  record_per_n_maxima(report);
  return report;
}

BernsteinCheck bernstein_check(const SpectralField& theta, double beta,
                               const DyadicFamily& fam) {
  const VelocityField vel = velocity(theta, beta);
  BernsteinCheck chk;
  const NormReport nu = besov_norm(vel.u1, vel.u2, BesovParams{2.0, 2.0, 1.0}, fam);
  const NormReport nt = besov_norm(theta, BesovParams{1.0 + beta, 2.0, 1.0}, fam);
  chk.velocity_norm = nu.total;
  chk.scalar_norm = nt.total;
  chk.ratio = nt.total > 0.0 ? nu.total / nt.total : 0.0;
  for (std::size_t i = 0; i < nu.per_block.size(); ++i) {
    if (nt.per_block[i].second > 0.0) {
      chk.per_block.emplace_back(nu.per_block[i].first,
                                 nu.per_block[i].second / nt.per_block[i].second);
    }
  }
  return chk;
}

VerifyReport bernstein_suite(const VerifySuiteConfig& cfg) {
  cfg.validate();
  const DyadicFamily fam = DyadicFamily::build();
  const std::vector<SuiteCaseKey> keys = suite_cases(cfg);
  std::vector<std::vector<VerifyCase>> rows(keys.size());

  parallel_cases(keys.size(), [&](std::size_t ci) {
    const SuiteCaseKey& key = keys[ci];
    const SpectralField theta = suite_field(cfg, key);
    const BernsteinCheck chk = bernstein_check(theta, key.beta, fam);
    rows[ci].push_back(VerifyCase{key.seed, key.gamma, key.n, key.beta,
                                  VerifyCase::block_none, chk.velocity_norm,
                                  chk.scalar_norm, chk.ratio,
                                  chk.scalar_norm == 0.0});
    for (const auto& [j, r] : chk.per_block) {
      rows[ci].push_back(
          VerifyCase{key.seed, key.gamma, key.n, key.beta, j, 0.0, 0.0, r, false});
    }
  });

  VerifyReport report;
  report.label = "bernstein";
  for (auto& rv : rows) {
    report.cases.insert(report.cases.end(), rv.begin(), rv.end());
  }
  finish_report(report);
  record_per_n_maxima(report);
  return report;
}

GrowthFit growth_fit(std::span<const std::pair<double, double>> series) {
  const std::size_t m = series.size();
  if (m < 3) throw parameter_error("growth_fit: need at least 3 points");
  for (std::size_t i = 1; i < m; ++i) {
    if (!(series[i].first > series[i - 1].first)) {
      throw parameter_error("growth_fit: times must be strictly increasing");
    }
  }
  std::vector<double> deriv(m, 0.0);
  deriv[0] = (series[1].second - series[0].second) / (series[1].first - series[0].first);
  deriv[m - 1] = (series[m - 1].second - series[m - 2].second) /
                 (series[m - 1].first - series[m - 2].first);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    deriv[i] = (series[i + 1].second - series[i - 1].second) /
               (series[i + 1].first - series[i - 1].first);
  }
  GrowthFit fit;
  bool any = false;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double nsq = series[i].second * series[i].second;
    if (nsq == 0.0) continue;
    const double c = deriv[i] / nsq;
    fit.c_fit = any ? std::max(fit.c_fit, c) : c;
    any = true;
  }
  // Envelope check: N(0) exp(c_fit * int_0^t N) against the series.
  double integral = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0) {
      integral += 0.5 * (series[i].second + series[i - 1].second) *
                  (series[i].first - series[i - 1].first);
    }
    const double envelope = series[0].second * std::exp(fit.c_fit * integral);
    if (series[i].second > 0.0) {
      worst = std::max(worst, (series[i].second - envelope) / series[i].second);
    }
  }
  fit.residual = worst;
  return fit;
}

ScalingReport scaling_experiment(const SpectralField& theta0, double beta,
                                 std::span<const double> lambdas,
                                 const ModelParams& params, double t_cap,
                                 int sample_every) {
  if (lambdas.size() < 2) {
    throw parameter_error("scaling_experiment: need at least 2 lambdas");
  }
  for (double l : lambdas) {
    if (!(l > 0.0)) throw parameter_error("scaling_experiment: lambdas must be > 0");
  }
  if (sample_every < 1) {
    throw parameter_error("scaling_experiment: sample_every must be >= 1");
  }
  params.validate();
  const DyadicFamily fam = DyadicFamily::build();
  const BesovParams prm{1.0 + beta, 2.0, 1.0};

  ScalingReport report;
  for (double lambda : lambdas) {
    DoublingCase item;
    item.lambda = lambda;
    SimState state{SpectralField(theta0.grid), 0.0, params};
    state.params.beta = beta;
    for (std::size_t i = 0; i < theta0.coeffs.size(); ++i) {
      state.theta.coeffs[i] = lambda * theta0.coeffs[i];
    }
    const double start = besov_norm(state.theta, prm, fam).total;
    const double target = 2.0 * start;
    if (start == 0.0) {
      report.cases.push_back(item);
      continue;
    }
    double prev_t = 0.0;
    double prev_norm = start;
    int steps = 0;
    while (state.t < t_cap) {
      const double dt = adaptive_dt(state);
      double tail = 0.0;
      try {
        state = step_rk4(state, dt, &tail);
      } catch (const blowup_error&) {
        item.exhausted = true;
        break;
      }
      ++steps;
      if (tail > 0.1) {
        item.exhausted = true;
        break;
      }
      if (steps % sample_every != 0) continue;
      const double norm = besov_norm(state.theta, prm, fam).total;
      if (norm >= target) {
        const double frac = (target - prev_norm) / (norm - prev_norm);
        item.t_double = prev_t + frac * (state.t - prev_t);
        item.product = lambda * item.t_double;
        item.doubled = true;
        break;
      }
      prev_t = state.t;
      prev_norm = norm;
    }
    report.cases.push_back(item);
  }

  // Log-log slope of t_double against lambda over the doubled cases.
  std::vector<std::pair<double, double>> pts;
  for (const auto& c : report.cases) {
    if (c.doubled) pts.emplace_back(std::log(c.lambda), std::log(c.t_double));
  }
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = static_cast<double>(pts.size());
    const double denom = k * sxx - sx * sx;
    if (denom > 0.0) {
      report.slope = (k * sxy - sx * sy) / denom;
      const double intercept = (sy - report.slope * sx) / k;
      for (const auto& [x, y] : pts) {
        report.slope_residual =
            std::max(report.slope_residual, std::abs(y - (report.slope * x + intercept)));
      }
    }
  }
  return report;
}

}  // namespace lpscalar
