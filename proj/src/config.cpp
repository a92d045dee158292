#include "lpscalar/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lpscalar {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw config_error(key + ": " + what);
}

void require_keys(const json& obj, const std::string& scope,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      const std::string full = scope.empty() ? key : scope + "." + key;
      throw config_error(full + ": unknown key");
    }
  }
}

double number_at(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (v.is_string() && v.get<std::string>() == "inf") return kInf;
  if (!v.is_number()) fail(key, "expected a number or \"inf\"");
  return v.get<double>();
}

int int_at(const json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(key, "expected an integer");
  return v.get<int>();
}

std::uint64_t seed_at(const json& obj, const std::string& key, std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_unsigned() && !v.is_number_integer()) fail(key, "expected an integer seed");
  return v.get<std::uint64_t>();
}

std::string string_at(const json& obj, const std::string& key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

void check_exponent(double v, const std::string& key) {
  if (!(v >= 1.0)) fail(key, "must be >= 1 (or \"inf\")");
}

RunConfig parse_validated(json& root, const std::vector<std::string>& overrides);

}  // namespace

RunMode parse_mode(const std::string& name) {
  if (name == "simulate") return RunMode::simulate;
  if (name == "norms") return RunMode::norms;
  if (name == "verify-commutator") return RunMode::verify_commutator;
  if (name == "verify-embedding") return RunMode::verify_embedding;
  if (name == "verify-bernstein") return RunMode::verify_bernstein;
  if (name == "scaling") return RunMode::scaling;
  throw config_error("mode: unknown mode \"" + name +
                     "\" (expected simulate | norms | verify-commutator | "
                     "verify-embedding | verify-bernstein | scaling)");
}

std::string mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::simulate: return "simulate";
    case RunMode::norms: return "norms";
    case RunMode::verify_commutator: return "verify-commutator";
    case RunMode::verify_embedding: return "verify-embedding";
    case RunMode::verify_bernstein: return "verify-bernstein";
    case RunMode::scaling: return "scaling";
  }
  return "simulate";
}

RunConfig parse_config(const std::string& json_text,
                       const std::vector<std::string>& overrides) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config: JSON parse failure: ") + e.what());
  }
  if (!root.is_object()) throw config_error("config: top level must be an object");

  try {
    return parse_validated(root, overrides);
  } catch (const json::exception& e) {
    throw config_error(std::string("config: ") + e.what());
  }
}

namespace {

RunConfig parse_validated(json& root, const std::vector<std::string>& overrides) {
  for (const std::string& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw config_error("override \"" + ov + "\": expected key=value");
    }
    const std::string path = ov.substr(0, eq);
    const std::string text = ov.substr(eq + 1);
    json value;
    try {
      value = json::parse(text);
    } catch (const json::parse_error&) {
      value = text;  // bare words are strings
    }
    json* node = &root;
    std::stringstream ss(path);
    std::string part, prev;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    if (parts.empty()) throw config_error("override \"" + ov + "\": empty key");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      node = &(*node)[parts[i]];
      if (!node->is_object()) *node = json::object();
    }
    (*node)[parts.back()] = value;
  }

  require_keys(root, "",
               {"mode", "n", "beta", "t_end", "cfl", "dt_max", "save_every",
                "seed", "output_dir", "snapshot_in", "initial", "norm",
                "verify", "lambdas"});

  RunConfig cfg;
  cfg.mode = parse_mode(string_at(root, "mode", "simulate"));

  cfg.n = int_at(root, "n", cfg.n);
  if (!is_power_of_two(cfg.n) || cfg.n < 16) {
    fail("n", "must be a power of two >= 16, got " + std::to_string(cfg.n));
  }
  cfg.beta = number_at(root, "beta", cfg.beta);
  if (!(cfg.beta >= 0.0 && cfg.beta <= 2.0)) {
    fail("beta", "must be in [0, 2], got " + std::to_string(cfg.beta));
  }
  cfg.t_end = number_at(root, "t_end", cfg.t_end);
  if (!(cfg.t_end > 0.0 && std::isfinite(cfg.t_end))) fail("t_end", "must be > 0 and finite");
  cfg.cfl = number_at(root, "cfl", cfg.cfl);
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) fail("cfl", "must be in (0, 1]");
  cfg.dt_max = number_at(root, "dt_max", cfg.dt_max);
  if (!(cfg.dt_max > 0.0)) fail("dt_max", "must be > 0");
  cfg.save_every = int_at(root, "save_every", cfg.save_every);
  if (cfg.save_every < 1) fail("save_every", "must be >= 1");
  cfg.seed = seed_at(root, "seed", cfg.seed);
  cfg.output_dir = string_at(root, "output_dir", cfg.output_dir);
  cfg.snapshot_in = string_at(root, "snapshot_in", cfg.snapshot_in);

  if (root.contains("initial")) {
    const json& ini = root.at("initial");
    if (!ini.is_object()) fail("initial", "expected an object");
    require_keys(ini, "initial",
                 {"kind", "seed", "gamma", "amplitude", "kmin", "kmax", "k",
                  "count", "width"});
    cfg.initial.kind = string_at(ini, "kind", cfg.initial.kind);
    if (cfg.initial.kind != "random-spectrum" &&
        cfg.initial.kind != "gaussian-bumps" && cfg.initial.kind != "shear") {
      fail("initial.kind", "unknown kind \"" + cfg.initial.kind + "\"");
    }
    cfg.initial.gamma = number_at(ini, "gamma", cfg.initial.gamma);
    if (cfg.initial.gamma < 0.0) fail("initial.gamma", "must be >= 0");
    cfg.initial.amplitude = number_at(ini, "amplitude", cfg.initial.amplitude);
    if (!(cfg.initial.amplitude >= 0.0)) fail("initial.amplitude", "must be >= 0");
    cfg.initial.kmin = int_at(ini, "kmin", cfg.initial.kmin);
    if (cfg.initial.kmin < 1) fail("initial.kmin", "must be >= 1");
    cfg.initial.kmax = int_at(ini, "kmax", cfg.initial.kmax);
    if (cfg.initial.kmax < 0) fail("initial.kmax", "must be >= 0 (0 = full band)");
    cfg.initial.shear_k = int_at(ini, "k", cfg.initial.shear_k);
    if (cfg.initial.shear_k < 1) fail("initial.k", "must be >= 1");
    cfg.initial.bump_count = int_at(ini, "count", cfg.initial.bump_count);
    if (cfg.initial.bump_count < 2 || cfg.initial.bump_count % 2 != 0) {
      fail("initial.count", "must be even and >= 2");
    }
    cfg.initial.bump_width = number_at(ini, "width", cfg.initial.bump_width);
    if (!(cfg.initial.bump_width > 0.0)) fail("initial.width", "must be > 0");
    cfg.initial.seed = seed_at(ini, "seed", cfg.seed);
  } else {
    cfg.initial.seed = cfg.seed;
  }

  if (root.contains("norm")) {
    const json& nrm = root.at("norm");
    if (!nrm.is_object()) fail("norm", "expected an object");
    require_keys(nrm, "norm", {"s", "p", "q"});
    cfg.norm.s = number_at(nrm, "s", cfg.norm.s);
    if (!std::isfinite(cfg.norm.s)) fail("norm.s", "must be finite");
    cfg.norm.p = number_at(nrm, "p", cfg.norm.p);
    check_exponent(cfg.norm.p, "norm.p");
    cfg.norm.q = number_at(nrm, "q", cfg.norm.q);
    check_exponent(cfg.norm.q, "norm.q");
  }

  if (root.contains("verify")) {
    const json& ver = root.at("verify");
    if (!ver.is_object()) fail("verify", "expected an object");
    require_keys(ver, "verify",
                 {"seeds", "n_list", "beta_list", "gamma_list", "p", "q", "M",
                  "pair_budget", "amplitude"});
    if (ver.contains("seeds")) {
      if (!ver.at("seeds").is_array()) fail("verify.seeds", "expected an array");
      cfg.verify.seeds = ver.at("seeds").get<std::vector<std::uint64_t>>();
    }
    if (ver.contains("n_list")) {
      if (!ver.at("n_list").is_array()) fail("verify.n_list", "expected an array");
      cfg.verify.n_list = ver.at("n_list").get<std::vector<int>>();
    }
    if (ver.contains("beta_list")) {
      if (!ver.at("beta_list").is_array()) fail("verify.beta_list", "expected an array");
      cfg.verify.beta_list = ver.at("beta_list").get<std::vector<double>>();
    }
    if (ver.contains("gamma_list")) {
      if (!ver.at("gamma_list").is_array()) fail("verify.gamma_list", "expected an array");
      cfg.verify.gamma_list = ver.at("gamma_list").get<std::vector<double>>();
    }
    cfg.verify.p = number_at(ver, "p", cfg.verify.p);
    check_exponent(cfg.verify.p, "verify.p");
    cfg.verify.q = number_at(ver, "q", cfg.verify.q);
    check_exponent(cfg.verify.q, "verify.q");
    cfg.verify.M = int_at(ver, "M", cfg.verify.M);
    if (cfg.verify.M < 0) fail("verify.M", "must be >= 0");
    cfg.verify.pair_budget = int_at(ver, "pair_budget", cfg.verify.pair_budget);
    if (cfg.verify.pair_budget < 0) fail("verify.pair_budget", "must be >= 0");
    cfg.verify.amplitude = number_at(ver, "amplitude", cfg.verify.amplitude);
    if (!(cfg.verify.amplitude >= 0.0)) fail("verify.amplitude", "must be >= 0");
    try {
      cfg.verify.validate();
    } catch (const parameter_error& e) {
      throw config_error(e.what());
    }
  }

  if (root.contains("lambdas")) {
    if (!root.at("lambdas").is_array()) fail("lambdas", "expected an array");
    cfg.lambdas = root.at("lambdas").get<std::vector<double>>();
    if (cfg.lambdas.size() < 2) fail("lambdas", "need at least 2 values");
    for (double l : cfg.lambdas) {
      if (!(l > 0.0)) fail("lambdas", "entries must be > 0");
    }
  }

  if (cfg.mode == RunMode::norms && cfg.snapshot_in.empty()) {
    fail("snapshot_in", "required for norms mode");
  }
  if (cfg.initial.kind == "shear" && 3 * cfg.initial.shear_k > cfg.n) {
    fail("initial.k", "shear wave number must be <= n/3");
  }
  return cfg;
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  return load_config(path, {});
}

RunConfig load_config(const std::filesystem::path& path,
                      const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), overrides);
}

}  // namespace lpscalar
