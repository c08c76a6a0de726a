#ifndef LEVYRW_APP_HPP
#define LEVYRW_APP_HPP

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "levyrw/averaging.hpp"
#include "levyrw/batch.hpp"
#include "levyrw/config.hpp"
#include "levyrw/environment.hpp"
#include "levyrw/pvp.hpp"
#include "levyrw/trajectory.hpp"
#include "levyrw/verify.hpp"

// Subcommand bodies of the levyrw tool. Every CSV starts with a
// "# schema: <name>/<version>" line; every JSON carries a "schema" field.

namespace levyrw::app {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2, kRuntimeError = 3 };

/// Shortest text that round-trips a double.
inline std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::string& schema, const std::string& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw Error("cannot write '" + path.string() + "'");
    out_ << "# schema: " << schema << '\n' << header << '\n';
  }

  template <class... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << '\n';
  }

 private:
  static std::string cell(double x) { return fmt_double(x); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  template <class I>
    requires std::is_integral_v<I>
  static std::string cell(I i) {
    return std::to_string(i);
  }

  std::ofstream out_;
};

struct Options {
  unsigned threads = 1;
  std::filesystem::path out_dir = "out";
};

inline std::filesystem::path prepare(const Options& opt) {
  std::filesystem::create_directories(opt.out_dir);
  return opt.out_dir;
}

/// WalkerResult rows (walker_id, t, x, n_of_t) for every walker and grid time.
inline std::filesystem::path run_simulate(const RunConfig& cfg, const Options& opt) {
  const auto dir = prepare(opt);
  BatchSpec spec{cfg.dist, cfg.density};
  spec.mode = cfg.mode;
  spec.master_seed = cfg.master_seed;
  spec.environment_seed = cfg.environment_seed;
  spec.walkers = cfg.walker_count;
  spec.times = cfg.t_grid();
  spec.threads = opt.threads;
  const auto results = run_batch(spec);

  const auto path = dir / "walkers.csv";
  CsvWriter csv(path, "levyrw.walker_results/1", "walker_id,t,x,n_of_t");
  for (std::size_t w = 0; w < results.size(); ++w)
    for (const auto& r : results[w]) csv.row(w, r.t_eval, r.x_value, r.n_of_t);

  if (cfg.trajectory_dump) {
    Environment env(cfg.dist, cfg.mode == Mode::kQuenched
                                  ? spec.quenched_seed()
                                  : derive_seed(cfg.master_seed, StreamRole::kEnvironment, 0));
    RandomStream rng = make_stream(cfg.master_seed, StreamRole::kWalker, 0);
    const auto traj = simulate(env, cfg.density, spec.times.back(), rng);
    CsvWriter t(dir / "trajectory_0.csv", "levyrw.trajectory/1", "n,xi_n,S_n,Y_n,tau_n");
    for (std::size_t n = 0; n <= traj.steps(); ++n)
      t.row(n, n == 0 ? std::int64_t{0} : traj.jumps[n - 1], traj.positions[n],
            traj.targets_hit[n], traj.collision_times[n]);
  }
  return path;
}

/// Runs the requested checks, writes report.json, prints one line per check.
inline VerificationReport run_verify(const RunConfig& cfg, const std::vector<std::string>& checks,
                                     const Options& opt, std::ostream& log = std::cout) {
  for (const auto& id : checks)
    if (!verify::is_supported(id)) throw ConfigError("unknown check '" + id + "'");
  const auto params = verify_params(cfg);
  const verify::Context ctx{cfg.master_seed, opt.threads};
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  for (const auto& id : checks) {
    report.records.push_back(verify::run_check(id, params, ctx));
    const auto& r = report.records.back();
    const auto& h = r.headline();
    log << (r.pass() ? "PASS " : "FAIL ") << r.theorem_id << "  " << h.name
        << "  estimate=" << fmt_double(h.estimate) << " target=" << fmt_double(h.target)
        << " tol=" << fmt_double(h.tolerance) << " (" << r.wall_seconds << " s)\n";
  }
  report.metadata = {
      {"version", kVersion},
      {"master_seed", cfg.master_seed},
      {"threads", opt.threads},
      {"checks", checks},
      {"wall_seconds",
       std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  const auto dir = prepare(opt);
  std::ofstream out(dir / "report.json", std::ios::binary);
  if (!out) throw Error("cannot write report.json");
  out << report.to_json().dump(2) << '\n';
  return report;
}

/// Checkpoints 1, 2, 5, 10, 20, 50, ... up to (and including) steps.
inline std::vector<std::uint64_t> decade_checkpoints(std::uint64_t steps) {
  std::vector<std::uint64_t> c;
  for (std::uint64_t base = 1; base <= steps; base *= 10) {
    for (std::uint64_t m : {1, 2, 5})
      if (base * m <= steps) c.push_back(base * m);
    if (base > steps / 10) break;
  }
  return c;
}

/// Birkhoff series (n, birkhoff_avg, target, rel_err) of the jump-length
/// observable along one PVP orbit.
inline std::filesystem::path run_pvp(const RunConfig& cfg, const Options& opt) {
  const auto dir = prepare(opt);
  Environment env(cfg.dist, cfg.environment_seed.value_or(
                                derive_seed(cfg.master_seed, StreamRole::kEnvironment, 0)));
  RandomStream rng = make_stream(cfg.master_seed, StreamRole::kChain, 0);
  const auto series =
      birkhoff_average(env, cfg.density, cfg.pvp_steps, decade_checkpoints(cfg.pvp_steps), rng);
  const auto path = dir / "birkhoff.csv";
  CsvWriter csv(path, "levyrw.birkhoff_series/1", "n,birkhoff_avg,target,rel_err");
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    const double a = series.averages[i];
    csv.row(series.checkpoints[i], a, series.target, std::fabs(a / series.target - 1.0));
  }
  return path;
}

/// E_n(a) series for the three built-in averaging probes.
inline std::filesystem::path run_averaging(const RunConfig& cfg, const Options& opt) {
  const auto dir = prepare(opt);
  const auto path = dir / "averaging.csv";
  CsvWriter csv(path, "levyrw.averaging_series/1", "probe,n,value,cesaro_limit,abs_error");
  const verify::AveragingParams defaults;
  for (const auto& probe : {probes::constant(defaults.constant_value), probes::alternating(),
                            probes::decaying(defaults.decaying_limit)}) {
    for (const auto& pt : averaging_check(probe, cfg.averaging_n_list))
      csv.row(probe.name, pt.n, pt.value, probe.cesaro_limit, pt.abs_error);
  }
  return path;
}

/// Materialised targets (k, omega_k, zeta_k) for k in [k_min, k_max].
inline std::filesystem::path run_dump_env(const RunConfig& cfg, const Options& opt) {
  const auto dir = prepare(opt);
  Environment env(cfg.dist, cfg.environment_seed.value_or(
                                derive_seed(cfg.master_seed, StreamRole::kEnvironment, 0)));
  const auto path = dir / "environment.csv";
  CsvWriter csv(path, "levyrw.environment/1", "k,omega_k,zeta_k");
  for (std::int64_t k = cfg.dump_k_min; k <= cfg.dump_k_max; ++k)
    csv.row(k, env.target(k), env.gap(k));
  return path;
}

}  // namespace levyrw::app

#endif  // LEVYRW_APP_HPP
