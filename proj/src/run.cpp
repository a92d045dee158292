#include "lpscalar/run.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "lpscalar/evolution.hpp"
#include "lpscalar/snapshot.hpp"

namespace lpscalar {

namespace fs = std::filesystem;

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// Whole-file atomic text write (temp + rename), matching the snapshot policy.
void write_text(const fs::path& path, const std::string& body) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw data_error("cannot open " + tmp.string());
    out << body;
    if (!out) throw data_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string snapshot_name(long step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%06ld.bin", step);
  return buf;
}

std::string verify_case_csv(const VerifyReport& report) {
  std::string body = "seed,gamma,n,beta,j,lhs,rhs,ratio,degenerate\n";
  for (const auto& c : report.cases) {
    body += std::to_string(c.seed) + "," + csv_number(c.gamma) + "," +
            std::to_string(c.n) + "," + csv_number(c.beta) + ",";
    if (c.j != VerifyCase::block_none) body += std::to_string(c.j);
    body += "," + csv_number(c.lhs) + "," + csv_number(c.rhs) + "," +
            csv_number(c.ratio) + "," + (c.degenerate ? "1" : "0") + "\n";
  }
  return body;
}

std::string verify_summary(const VerifyReport& report) {
  std::string body = "suite: " + report.label + "\n";
  std::size_t degenerate = 0;
  for (const auto& c : report.cases) degenerate += c.degenerate ? 1 : 0;
  body += "cases: " + std::to_string(report.cases.size()) + " (degenerate " +
          std::to_string(degenerate) + ")\n";
  body += "max ratio: " + csv_number(report.max_ratio) + "\n";
  body += "median ratio: " + csv_number(report.median_ratio) + "\n";
  for (const auto& [name, value] : report.fitted) {
    body += name + ": " + csv_number(value) + "\n";
  }
  return body;
}

RunResult run_simulate(const RunConfig& cfg) {
  const Grid2D grid(cfg.n);
  const DyadicFamily fam = DyadicFamily::build();
  const BesovParams series_norm{1.0 + cfg.beta, 2.0, 1.0};
  const PairSampler sampler{cfg.seed, cfg.verify.pair_budget};
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);

  SimState state{generate_initial(cfg.initial, grid), 0.0,
                 ModelParams{cfg.beta, cfg.cfl, cfg.dt_max}};

  std::string csv = "t,l2,linf,besov,ll0_u,dt,tail_fraction\n";
  auto emit = [&](const SimState& s, double dt, double tail, long step) {
    const VelocityField vel = velocity(s.theta, cfg.beta);
    const PhysicalField theta_p = inverse_transform(s.theta);
    csv += csv_number(s.t) + "," + csv_number(l2_norm(s.theta)) + "," +
           csv_number(max_abs(theta_p)) + "," +
           csv_number(besov_norm(s.theta, series_norm, fam).total) + "," +
           csv_number(log_lipschitz_norm(inverse_transform(vel.u1),
                                         inverse_transform(vel.u2), 0.0, sampler)) +
           "," + csv_number(dt) + "," + csv_number(tail) + "\n";
    write_snapshot(theta_p, SnapshotMeta{cfg.beta, s.t}, dir / snapshot_name(step));
  };

  double tail0 = 0.0;
  advect_rhs(state.theta, cfg.beta, &tail0);
  emit(state, std::min(adaptive_dt(state), cfg.t_end), tail0, 0);

  RunResult result;
  long steps = 0;
  while (state.t < cfg.t_end) {
    const double dt = std::min(adaptive_dt(state), cfg.t_end - state.t);
    if (!(dt > 0.0)) break;
    double tail = 0.0;
    try {
      state = step_rk4(state, dt, &tail);
    } catch (const blowup_error& e) {
      result.status = kStatusBlowup;
      result.message = e.what();
      break;
    }
    ++steps;
    if (steps % cfg.save_every == 0) emit(state, dt, tail, steps);
    if (tail > 0.1) {
      result.status = kStatusExhausted;
      result.message =
          "resolution exhausted: dealiased tail fraction " + csv_number(tail) +
          " > 0.1 at t = " + csv_number(state.t);
      break;
    }
  }

  write_text(dir / "series.csv", csv);
  write_snapshot(inverse_transform(state.theta), SnapshotMeta{cfg.beta, state.t},
                 dir / "final.bin");
  if (result.status == kStatusOk) {
    result.message = "simulate: " + std::to_string(steps) + " steps to t = " +
                     csv_number(state.t);
  }
  return result;
}

RunResult run_norms(const RunConfig& cfg) {
  const Snapshot snap = read_snapshot(cfg.snapshot_in);
  const DyadicFamily fam = DyadicFamily::build();
  const SpectralField theta = forward_transform(snap.field);
  const NormReport report = besov_norm(theta, cfg.norm, fam);
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);

  std::string csv = "j,weighted_block_norm\n";
  for (const auto& [j, v] : report.per_block) {
    csv += std::to_string(j) + "," + csv_number(v) + "\n";
  }
  csv += "total," + csv_number(report.total) + "\n";
  write_text(dir / "norms.csv", csv);

  std::string txt = "snapshot: " + cfg.snapshot_in + "\n";
  txt += "time: " + csv_number(snap.meta.time) +
         "  beta: " + csv_number(snap.meta.beta) + "\n";
  txt += "besov(s=" + csv_number(cfg.norm.s) + ", p=" + csv_number(cfg.norm.p) +
         ", q=" + csv_number(cfg.norm.q) + "): " + csv_number(report.total) + "\n";
  txt += "l2: " + csv_number(lp_norm(snap.field, 2.0)) +
         "  linf: " + csv_number(max_abs(snap.field)) + "\n";
  write_text(dir / "norms.txt", txt);
  return {kStatusOk, "norms: total = " + csv_number(report.total)};
}

RunResult run_verify(const RunConfig& cfg) {
  VerifyReport report;
  switch (cfg.mode) {
    case RunMode::verify_commutator: report = commutator_suite(cfg.verify); break;
    case RunMode::verify_embedding: report = embedding_suite(cfg.verify); break;
    default: report = bernstein_suite(cfg.verify); break;
  }
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  write_text(dir / "report.csv", verify_case_csv(report));
  write_text(dir / "summary.txt", verify_summary(report));
  return {kStatusOk, report.label + ": max ratio " + csv_number(report.max_ratio)};
}

RunResult run_scaling(const RunConfig& cfg) {
  const Grid2D grid(cfg.n);
  const SpectralField theta0 = generate_initial(cfg.initial, grid);
  const ScalingReport report =
      scaling_experiment(theta0, cfg.beta, cfg.lambdas,
                         ModelParams{cfg.beta, cfg.cfl, cfg.dt_max}, cfg.t_end,
                         cfg.save_every);
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);

  std::string csv = "lambda,t_double,product,doubled,exhausted\n";
  for (const auto& c : report.cases) {
    csv += csv_number(c.lambda) + "," + csv_number(c.t_double) + "," +
           csv_number(c.product) + "," + (c.doubled ? "1" : "0") + "," +
           (c.exhausted ? "1" : "0") + "\n";
  }
  write_text(dir / "report.csv", csv);

  std::size_t doubled = 0;
  for (const auto& c : report.cases) doubled += c.doubled ? 1 : 0;
  std::string txt = "doubling-time scaling\n";
  txt += "cases doubled: " + std::to_string(doubled) + " / " +
         std::to_string(report.cases.size()) + "\n";
  txt += "log-log slope: " + csv_number(report.slope) +
         " (residual " + csv_number(report.slope_residual) + ")\n";
  for (const auto& c : report.cases) {
    txt += "lambda " + csv_number(c.lambda) + ": " +
           (c.doubled ? "t_double " + csv_number(c.t_double) + ", product " +
                            csv_number(c.product)
                      : std::string(c.exhausted ? "resolution exhausted"
                                                : "no doubling before t_end")) +
           "\n";
  }
  write_text(dir / "summary.txt", txt);
  const std::string msg = "scaling: " + std::to_string(doubled) + "/" +
                          std::to_string(report.cases.size()) +
                          " cases doubled, slope " + csv_number(report.slope);
  return {kStatusOk, msg};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  switch (cfg.mode) {
    case RunMode::simulate: return run_simulate(cfg);
    case RunMode::norms: return run_norms(cfg);
    case RunMode::scaling: return run_scaling(cfg);
    default: return run_verify(cfg);
  }
}

}  // namespace lpscalar
