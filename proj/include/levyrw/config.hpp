#ifndef LEVYRW_CONFIG_HPP
#define LEVYRW_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "levyrw/batch.hpp"
#include "levyrw/environment.hpp"
#include "levyrw/error.hpp"
#include "levyrw/jump_density.hpp"
#include "levyrw/verify.hpp"

namespace levyrw {

/// Everything a CLI run needs. Optional members stay empty when the config
/// file does not set them, so verification defaults survive.
struct RunConfig {
  std::uint64_t master_seed = 1;
  GapDistribution dist = GapDistribution{Pareto{1.5, 1.0}};
  bool has_environment = false;
  std::optional<std::uint64_t> environment_seed;
  JumpDensity density = JumpDensity::simple_symmetric();
  bool has_jumps = false;
  Mode mode = Mode::kQuenched;
  double t_max = 1e4;
  int t_levels = 1;
  bool has_t_grid = false;
  std::size_t walker_count = 1000;
  bool has_walkers = false;
  std::size_t environment_count = 1;
  bool has_environments = false;
  std::vector<double> q_list{1.0, 2.0, 4.0};
  bool has_q_list = false;
  double q_max = 8.0;
  std::string out_dir = "out";
  std::map<std::string, double> tolerances;
  bool trajectory_dump = false;
  std::uint64_t pvp_steps = 1'000'000;
  std::vector<std::uint64_t> averaging_n_list{100, 10'000, 1'000'000};
  std::int64_t dump_k_min = -100;
  std::int64_t dump_k_max = 100;
  nlohmann::json verify_overrides = nlohmann::json::object();

  std::vector<double> t_grid() const { return geometric_grid(t_max, t_levels); }
};

namespace detail {

class Fields {
 public:
  Fields(const nlohmann::json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ConfigError("config field '" + where() + "' must be a table");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return obj_.contains(key);
  }

  const nlohmann::json& raw(const std::string& key) {
    seen_.insert(key);
    return obj_.at(key);
  }

  double number(const std::string& key) {
    const auto& v = raw(key);
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
  }

  std::uint64_t count(const std::string& key, std::uint64_t min = 0) {
    const auto& v = raw(key);
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      const auto x = v.get<std::uint64_t>();
      if (x < min) fail(key, "must be >= " + std::to_string(min));
      return x;
    }
    if (v.is_number_float() && v.get<double>() >= 0 && v.get<double>() == std::floor(v.get<double>()) &&
        v.get<double>() < 1.8e19) {
      const auto x = static_cast<std::uint64_t>(v.get<double>());
      if (x < min) fail(key, "must be >= " + std::to_string(min));
      return x;
    }
    fail(key, "expected a non-negative integer");
  }

  std::int64_t integer(const std::string& key) {
    const auto& v = raw(key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<std::int64_t>();
  }

  std::string text(const std::string& key) {
    const auto& v = raw(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

  bool flag(const std::string& key) {
    const auto& v = raw(key);
    if (!v.is_boolean()) fail(key, "expected true or false");
    return v.get<bool>();
  }

  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  /// Rejects keys nobody asked for (typos).
  void finish() const {
    for (const auto& [k, v] : obj_.items())
      if (!seen_.count(k)) throw ConfigError("config field '" + child(k) + "': unknown key");
  }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw ConfigError("config field '" + child(key) + "': " + msg);
  }

  std::string where() const { return path_.empty() ? "<root>" : path_; }

 private:
  const nlohmann::json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

inline GapDistribution parse_gaps(Fields& f, const std::string& name) {
  try {
    if (name == "pareto") return GapDistribution{Pareto{f.number("alpha"), f.number("xmin")}};
    if (name == "exponential") return GapDistribution{Exponential{f.number("rate")}};
    if (name == "constant") return GapDistribution{Constant{f.number("value")}};
    if (name == "uniform") return GapDistribution{UniformInterval{f.number("lo"), f.number("hi")}};
  } catch (const nlohmann::json::out_of_range&) {
    throw ConfigError("config field '" + f.where() + "': missing parameter for " + name);
  }
  throw ConfigError("config field 'environment.distribution': unknown gap distribution '" +
                    name + "' (pareto, exponential, constant, uniform)");
}

}  // namespace detail

/// Parses the JSON run configuration. Parse errors carry line and column;
/// field errors carry the dotted path of the offending key.
inline RunConfig parse_config(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ConfigError("config parse error at line " + std::to_string(line) + ", column " +
                      std::to_string(col) + ": " + e.what());
  }
  RunConfig cfg;
  detail::Fields f(root, "");
  if (f.has("master_seed")) cfg.master_seed = f.count("master_seed");
  if (f.has("environment")) {
    detail::Fields e(f.raw("environment"), "environment");
    if (!e.has("distribution")) e.fail("distribution", "missing");
    if (!e.has("params")) e.fail("params", "missing");
    const auto name = e.text("distribution");
    detail::Fields params(e.raw("params"), "environment.params");
    cfg.dist = detail::parse_gaps(params, name);
    params.finish();
    if (e.has("seed")) cfg.environment_seed = e.count("seed");
    e.finish();
    cfg.has_environment = true;
  }
  if (f.has("jumps")) {
    const auto& j = f.raw("jumps");
    std::vector<std::pair<std::int64_t, double>> half;
    if (!j.is_array()) f.fail("jumps", "expected a list of [k, weight] pairs with k >= 0");
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number())
        f.fail("jumps", "expected a list of [k, weight] pairs with k >= 0");
      half.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<double>());
    }
    try {
      cfg.density = JumpDensity::from_half(half);
    } catch (const Error& err) {
      f.fail("jumps", err.what());
    }
    cfg.has_jumps = true;
  }
  if (f.has("mode")) {
    const auto m = f.text("mode");
    if (m == "quenched") cfg.mode = Mode::kQuenched;
    else if (m == "annealed") cfg.mode = Mode::kAnnealed;
    else f.fail("mode", "expected 'quenched' or 'annealed'");
  }
  if (f.has("t_grid")) {
    detail::Fields g(f.raw("t_grid"), "t_grid");
    if (g.has("t_max")) cfg.t_max = g.number("t_max");
    if (g.has("levels")) cfg.t_levels = static_cast<int>(g.count("levels", 1));
    g.finish();
    if (!(cfg.t_max > 0.0)) throw ConfigError("config field 't_grid.t_max': must be > 0");
    if (cfg.t_levels > 60) throw ConfigError("config field 't_grid.levels': at most 60");
    cfg.has_t_grid = true;
  }
  if (f.has("walkers")) cfg.walker_count = f.count("walkers", 1), cfg.has_walkers = true;
  if (f.has("environments"))
    cfg.environment_count = f.count("environments", 1), cfg.has_environments = true;
  if (f.has("q_max")) cfg.q_max = f.number("q_max");
  if (f.has("q_list")) {
    const auto& q = f.raw("q_list");
    if (!q.is_array()) f.fail("q_list", "expected a list of numbers");
    cfg.q_list.clear();
    for (const auto& x : q) {
      if (!x.is_number()) f.fail("q_list", "expected a list of numbers");
      cfg.q_list.push_back(x.get<double>());
    }
    cfg.has_q_list = true;
  }
  for (double q : cfg.q_list)
    if (!(q >= 0.0 && q <= cfg.q_max))
      throw ConfigError("config field 'q_list': " + std::to_string(q) + " outside [0, q_max]");
  if (f.has("out_dir")) cfg.out_dir = f.text("out_dir");
  if (f.has("tolerances")) {
    detail::Fields t(f.raw("tolerances"), "tolerances");
    for (const char* key : {"ks", "moment", "lln", "lem4", "birkhoff", "annealed_fraction"})
      if (t.has(key)) cfg.tolerances[key] = t.number(key);
    t.finish();
  }
  if (f.has("trajectory_dump")) cfg.trajectory_dump = f.flag("trajectory_dump");
  if (f.has("pvp")) {
    detail::Fields p(f.raw("pvp"), "pvp");
    if (p.has("steps")) cfg.pvp_steps = p.count("steps", 1);
    p.finish();
  }
  if (f.has("averaging")) {
    detail::Fields a(f.raw("averaging"), "averaging");
    if (a.has("n_list")) {
      cfg.averaging_n_list.clear();
      for (const auto& x : a.raw("n_list")) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
          a.fail("n_list", "expected non-negative integers");
        cfg.averaging_n_list.push_back(x.get<std::uint64_t>());
      }
    }
    a.finish();
  }
  if (f.has("dump_env")) {
    detail::Fields d(f.raw("dump_env"), "dump_env");
    if (d.has("k_min")) cfg.dump_k_min = d.integer("k_min");
    if (d.has("k_max")) cfg.dump_k_max = d.integer("k_max");
    d.finish();
    if (cfg.dump_k_min > cfg.dump_k_max)
      throw ConfigError("config field 'dump_env': k_min must not exceed k_max");
  }
  if (f.has("verify")) {
    cfg.verify_overrides = f.raw("verify");
    if (!cfg.verify_overrides.is_object()) f.fail("verify", "must be a table");
  }
  f.finish();
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

/// Verification parameters: desk-scale defaults, overridden by whatever the
/// config sets.
inline verify::Params verify_params(const RunConfig& cfg) {
  verify::Params p;
  if (cfg.has_environment) {
    p.thm1.dist = p.thm2.dist = p.cor1.dist = p.lem4.dist = p.remark1.dist = cfg.dist;
    p.cor_a1.stationarity_dist = cfg.dist;
  }
  if (cfg.environment_seed) {
    p.thm2.environment_seed = p.lem4.environment_seed = *cfg.environment_seed;
    p.thm1.environment_seeds = {*cfg.environment_seed, *cfg.environment_seed + 1};
  }
  if (cfg.has_jumps) {
    p.thm1.density = p.thm2.density = p.cor1.density = p.cor2.density = cfg.density;
    p.lem4.density = p.cor_a1.density = cfg.density;
  }
  if (cfg.has_walkers) p.thm1.walkers = p.thm2.walkers = p.cor1.walkers = cfg.walker_count;
  if (cfg.has_t_grid) {
    p.thm1.t = p.thm2.t = p.cor1.t = p.cor2.t = cfg.t_max;
    p.thm2.grid_levels = cfg.t_levels;
  }
  if (cfg.has_q_list) p.thm2.q_abs = cfg.q_list;
  if (cfg.has_environments) p.cor2.environments = cfg.environment_count;
  for (const auto& [k, v] : cfg.tolerances) {
    if (k == "ks") p.thm1.ks_tolerance = p.cor1.ks_tolerance = p.remark1.ks_tolerance = p.cor_a1.ks_tolerance = v;
    if (k == "moment") p.thm2.relative_tolerance = v;
    if (k == "lln") p.lem3.relative_tolerance = v;
    if (k == "lem4") p.lem4.relative_tolerance = v;
    if (k == "birkhoff") p.cor_a1.mean_tolerance = p.cor_a1.spread_tolerance = v;
    if (k == "annealed_fraction") p.cor2.fraction = v;
  }

  // Per-check sizes: "verify": {"lem3": {"pairs": 10}, ...}
  const auto& v = cfg.verify_overrides;
  auto section = [&](const char* id) -> std::optional<detail::Fields> {
    if (!v.contains(id)) return std::nullopt;
    return detail::Fields(v.at(id), std::string("verify.") + id);
  };
  for (const auto& [k, _] : v.items())
    if (!verify::is_supported(k)) throw ConfigError("config field 'verify." + k + "': unknown check");
  if (auto s = section("thm1")) {
    if (s->has("environment_seeds")) {
      p.thm1.environment_seeds.clear();
      for (const auto& x : s->raw("environment_seeds")) p.thm1.environment_seeds.push_back(x.get<std::uint64_t>());
    }
    if (s->has("walkers")) p.thm1.walkers = s->count("walkers", 10);
    if (s->has("t")) p.thm1.t = s->number("t");
    s->finish();
  }
  if (auto s = section("thm2")) {
    if (s->has("walkers")) p.thm2.walkers = s->count("walkers", 2);
    if (s->has("t")) p.thm2.t = s->number("t");
    if (s->has("grid_levels")) p.thm2.grid_levels = static_cast<int>(s->count("grid_levels", 1));
    s->finish();
  }
  if (auto s = section("cor1")) {
    if (s->has("walkers")) p.cor1.walkers = s->count("walkers", 10);
    if (s->has("t")) p.cor1.t = s->number("t");
    s->finish();
  }
  if (auto s = section("cor2")) {
    if (s->has("environments")) p.cor2.environments = s->count("environments", 2);
    if (s->has("walkers_per_environment"))
      p.cor2.walkers_per_environment = s->count("walkers_per_environment", 1);
    if (s->has("t")) p.cor2.t = s->number("t");
    s->finish();
  }
  if (auto s = section("lem3")) {
    if (s->has("pairs")) p.lem3.pairs = s->count("pairs", 1);
    if (s->has("n")) p.lem3.n = s->count("n", 1);
    if (s->has("t")) p.lem3.t = s->number("t");
    s->finish();
  }
  if (auto s = section("lem4")) {
    if (s->has("walkers")) p.lem4.walkers = s->count("walkers", 2);
    if (s->has("n_list")) {
      p.lem4.n_list.clear();
      for (const auto& x : s->raw("n_list")) p.lem4.n_list.push_back(x.get<std::uint64_t>());
    }
    s->finish();
  }
  if (auto s = section("corA1")) {
    if (s->has("chains")) p.cor_a1.chains = s->count("chains", 1);
    if (s->has("birkhoff_seeds")) p.cor_a1.birkhoff_seeds = s->count("birkhoff_seeds", 2);
    if (s->has("birkhoff_steps")) p.cor_a1.birkhoff_steps = s->count("birkhoff_steps", 1);
    s->finish();
  }
  if (auto s = section("lemA3")) {
    if (s->has("n_list")) {
      p.lem_a3.n_list.clear();
      for (const auto& x : s->raw("n_list")) p.lem_a3.n_list.push_back(x.get<std::uint64_t>());
    }
    s->finish();
  }
  if (auto s = section("remark1")) {
    if (s->has("samples")) p.remark1.samples = s->count("samples", 1);
    if (s->has("t")) p.remark1.t = s->number("t");
    s->finish();
  }
  if (auto s = section("remark2")) s->finish();
  return p;
}

}  // namespace levyrw

#endif  // LEVYRW_CONFIG_HPP
