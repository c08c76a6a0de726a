#ifndef LEVYRW_VERIFY_HPP
#define LEVYRW_VERIFY_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "levyrw/averaging.hpp"
#include "levyrw/batch.hpp"
#include "levyrw/environment.hpp"
#include "levyrw/estimators.hpp"
#include "levyrw/jump_density.hpp"
#include "levyrw/parallel.hpp"
#include "levyrw/pvp.hpp"
#include "levyrw/report.hpp"
#include "levyrw/trajectory.hpp"

// Verification checks for the limit theorems of the Levy random environment
// walk. Every check is a pure function of its parameters and the context's
// master seed; thread count never changes a result.

namespace levyrw::verify {

struct Context {
  std::uint64_t master_seed = 1;
  unsigned threads = 1;
};

inline nlohmann::json describe(const GapDistribution& d) {
  nlohmann::json j{{"name", d.name()}, {"mean", gap_mean(d)}};
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Pareto>) {
          j["alpha"] = f.alpha;
          j["xmin"] = f.xmin;
        } else if constexpr (std::is_same_v<F, Exponential>) {
          j["rate"] = f.rate;
        } else if constexpr (std::is_same_v<F, Constant>) {
          j["value"] = f.value;
        } else {
          j["lo"] = f.lo;
          j["hi"] = f.hi;
        }
      },
      d.family());
  return j;
}

inline nlohmann::json describe(const JumpDensity& p) {
  nlohmann::json w = nlohmann::json::array();
  for (std::int64_t k = 0; k <= p.radius(); ++k) w.push_back({k, p.weight(k)});
  return {{"half_weights", w}, {"mean_abs_jump", p.mean_abs_jump()}, {"variance", p.variance()}};
}

inline const GapDistribution kLevyGaps{Pareto{1.5, 1.0}};

// ---------------------------------------------------------------------------
// Parameters; defaults are the desk-scale acceptance settings.
// ---------------------------------------------------------------------------

struct CltParams {
  GapDistribution dist = kLevyGaps;
  JumpDensity density = JumpDensity::simple_symmetric();
  std::vector<std::uint64_t> environment_seeds{101, 202};
  std::size_t walkers = 10'000;
  double t = 1e4;
  double ks_tolerance = 0.03;
};

struct MomentParams {
  GapDistribution dist = kLevyGaps;
  JumpDensity density = JumpDensity::simple_symmetric();
  std::uint64_t environment_seed = 101;
  std::size_t walkers = 10'000;
  double t = 1e4;
  int grid_levels = 5;
  std::vector<double> q_abs{1.0, 2.0, 4.0};
  std::vector<double> q_odd{1.0, 3.0};
  double relative_tolerance = 0.05;
  int trend_window = 4;
  int trend_min_monotone = 3;
  double odd_std_errors = 3.0;
};

struct AnnealedCltParams {
  GapDistribution dist = kLevyGaps;
  JumpDensity density = JumpDensity::simple_symmetric();
  std::size_t walkers = 10'000;
  double t = 1e4;
  double ks_tolerance = 0.03;
};

struct AnnealedMomentParams {
  GapDistribution dist{Exponential{1.0}};
  JumpDensity density = JumpDensity::simple_symmetric();
  std::size_t environments = 100;
  std::size_t walkers_per_environment = 100;
  double t = 1e4;
  double fraction = 0.95;
};

struct LlnParams {
  std::vector<GapDistribution> dists{GapDistribution{Constant{1.0}},
                                     GapDistribution{Exponential{1.0}}, kLevyGaps};
  std::vector<JumpDensity> densities{JumpDensity::simple_symmetric(),
                                     JumpDensity::lazy_simple_symmetric()};
  std::size_t pairs = 100;
  std::uint64_t n = 1'000'000;
  double t = 1e6;
  double relative_tolerance = 0.02;
};

struct JumpExpectationParams {
  GapDistribution dist = kLevyGaps;
  JumpDensity density = JumpDensity::simple_symmetric();
  std::uint64_t environment_seed = 101;
  std::vector<std::uint64_t> n_list{100, 1'000, 10'000};
  std::size_t walkers = 100'000;
  double relative_tolerance = 0.10;
};

struct PvpParams {
  GapDistribution stationarity_dist = kLevyGaps;
  JumpDensity density = JumpDensity::simple_symmetric();
  std::size_t chains = 100'000;
  std::uint64_t chain_steps = 10;
  double ks_tolerance = 0.03;
  GapDistribution birkhoff_dist{Exponential{1.0}};
  std::size_t birkhoff_seeds = 20;
  std::uint64_t birkhoff_steps = 1'000'000;
  double mean_tolerance = 0.05;
  double spread_tolerance = 0.05;
};

struct AveragingParams {
  std::vector<std::uint64_t> n_list{100, 10'000, 1'000'000};
  double constant_value = 2.0;
  double constant_threshold = 1e-12;
  double alternating_threshold = 0.01;  // at n = 10^4 and beyond
  double decaying_limit = 0.5;
  double decaying_threshold = 0.005;    // at the last n
  double monotone_slack = 1e-12;
};

struct LazyParams {
  GapDistribution dist = kLevyGaps;
  JumpDensity lazy_density = JumpDensity::lazy_simple_symmetric();
  std::uint64_t environment_seed = 303;
  std::size_t samples = 10'000;
  double t = 1e3;
  double ks_tolerance = 0.03;
  std::size_t path_trajectories = 20;
  std::size_t path_times = 100;
  double path_t_max = 200.0;
  double path_tolerance = 1e-12;
};

struct AlgebraParams {
  std::vector<JumpDensity> densities{
      JumpDensity::lazy_simple_symmetric(),
      JumpDensity::validate({{-2, 0.1}, {-1, 0.2}, {0, 0.4}, {1, 0.2}, {2, 0.1}}),
      JumpDensity::validate({{-3, 0.05}, {-2, 0.1}, {-1, 0.15}, {0, 0.4}, {1, 0.15}, {2, 0.1},
                             {3, 0.05}}),
      JumpDensity::simple_symmetric()};
  std::vector<double> q_list{0.5, 1.0, 2.0, 3.0, 4.0};
  double tolerance = 1e-12;
};

struct Params {
  CltParams thm1;
  MomentParams thm2;
  AnnealedCltParams cor1;
  AnnealedMomentParams cor2;
  LlnParams lem3;
  JumpExpectationParams lem4;
  PvpParams cor_a1;
  AveragingParams lem_a3;
  LazyParams remark1;
  AlgebraParams remark2;
};

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

inline CheckRecord check_quenched_clt(const CltParams& p, const Context& ctx) {
  CheckRecord r{"thm1"};
  const auto constants = LimitConstants::of(p.dist, p.density);
  r.parameters = {{"gaps", describe(p.dist)},          {"jumps", describe(p.density)},
                  {"environment_seeds", p.environment_seeds}, {"walkers", p.walkers},
                  {"t", p.t}};
  for (auto seed : p.environment_seeds) {
    BatchSpec spec{p.dist, p.density};
    spec.master_seed = ctx.master_seed;
    spec.environment_seed = seed;
    spec.walkers = p.walkers;
    spec.times = {p.t};
    spec.threads = ctx.threads;
    const auto xs = positions_at(run_batch(spec), 0);
    const auto clt = clt_report(xs, p.t, constants);
    Criterion c{"ks_environment_" + std::to_string(seed), CriterionKind::kBelow, clt.ks_distance,
                0.0, 1.0 / std::sqrt(static_cast<double>(xs.size())), p.ks_tolerance};
    std::vector<double> sq(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) sq[i] = xs[i] * xs[i] / p.t;
    c.details = {{"target_variance", clt.target_variance},
                 {"sample_variance", compensated_mean(sq)},
                 {"samples", clt.sample_count}};
    r.criteria.push_back(c);
  }
  return r;
}

/// Relative errors |estimate / target - 1| along the grid, and how many of
/// the last `window` grid points improve on their predecessor.
inline int monotone_steps(const std::vector<double>& errors, int window) {
  int count = 0;
  const int n = static_cast<int>(errors.size());
  for (int i = std::max(1, n - window); i < n; ++i)
    if (errors[static_cast<std::size_t>(i)] <= errors[static_cast<std::size_t>(i - 1)]) ++count;
  return count;
}

inline CheckRecord check_moments(const MomentParams& p, const Context& ctx) {
  CheckRecord r{"thm2"};
  const auto constants = LimitConstants::of(p.dist, p.density);
  const auto grid = geometric_grid(p.t, p.grid_levels);
  r.parameters = {{"gaps", describe(p.dist)},  {"jumps", describe(p.density)},
                  {"environment_seed", p.environment_seed}, {"walkers", p.walkers},
                  {"t_grid", grid},             {"q_abs", p.q_abs}, {"q_odd", p.q_odd}};
  BatchSpec spec{p.dist, p.density};
  spec.master_seed = ctx.master_seed;
  spec.environment_seed = p.environment_seed;
  spec.walkers = p.walkers;
  spec.times = grid;
  spec.threads = ctx.threads;
  const auto batch = run_batch(spec);
  const auto final_xs = positions_at(batch, grid.size() - 1);

  for (double q : p.q_abs) {
    std::vector<double> estimates, errors;
    MomentReport last;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      last = rescaled_moment(positions_at(batch, i), grid[i], q, constants);
      estimates.push_back(last.quenched_estimate);
      errors.push_back(std::fabs(last.quenched_estimate / last.target - 1.0));
    }
    Criterion c{"abs_moment_q" + nlohmann::json(q).dump(), CriterionKind::kRelative,
                last.quenched_estimate, last.target, last.standard_error, p.relative_tolerance};
    c.details = {{"t", p.t}, {"grid_estimates", estimates}, {"grid_relative_errors", errors}};
    r.criteria.push_back(c);
    Criterion trend{"trend_q" + nlohmann::json(q).dump(), CriterionKind::kAtLeast,
                    static_cast<double>(monotone_steps(errors, p.trend_window)),
                    static_cast<double>(p.trend_window), 0.0,
                    static_cast<double>(p.trend_min_monotone)};
    trend.details = {{"grid", grid}, {"grid_relative_errors", errors}};
    r.criteria.push_back(trend);
  }
  for (double q : p.q_odd) {
    const auto m = rescaled_moment(final_xs, p.t, q, constants);
    Criterion c{"signed_moment_q" + nlohmann::json(q).dump(), CriterionKind::kWithinStdErrors,
                *m.signed_estimate, 0.0, *m.signed_standard_error, p.odd_std_errors};
    r.criteria.push_back(c);
  }
  return r;
}

inline CheckRecord check_annealed_clt(const AnnealedCltParams& p, const Context& ctx) {
  CheckRecord r{"cor1"};
  const auto constants = LimitConstants::of(p.dist, p.density);
  r.parameters = {{"gaps", describe(p.dist)}, {"jumps", describe(p.density)},
                  {"walkers", p.walkers},      {"t", p.t}};
  BatchSpec spec{p.dist, p.density};
  spec.mode = Mode::kAnnealed;
  spec.master_seed = ctx.master_seed;
  spec.walkers = p.walkers;
  spec.times = {p.t};
  spec.threads = ctx.threads;
  const auto xs = positions_at(run_batch(spec), 0);
  const auto clt = clt_report(xs, p.t, constants);
  Criterion c{"ks_annealed", CriterionKind::kBelow, clt.ks_distance, 0.0,
              1.0 / std::sqrt(static_cast<double>(xs.size())), p.ks_tolerance};
  c.details = {{"target_variance", clt.target_variance}};
  r.criteria.push_back(c);
  return r;
}

inline CheckRecord check_annealed_bound(const AnnealedMomentParams& p, const Context& ctx) {
  CheckRecord r{"cor2"};
  r.parameters = {{"gaps", describe(p.dist)},
                  {"jumps", describe(p.density)},
                  {"environments", p.environments},
                  {"walkers_per_environment", p.walkers_per_environment},
                  {"t", p.t}};
  const auto rep = annealed_second_moment(p.environments, p.walkers_per_environment, p.t,
                                          {p.dist, p.density, ctx.master_seed, ctx.threads});
  Criterion c{"annealed_second_moment", CriterionKind::kAtLeastFraction, rep.estimate,
              rep.lower_bound, rep.standard_error, p.fraction};
  c.details = {{"between_environment_variance", rep.between_environment_variance},
               {"mean_within_environment_variance", rep.mean_within_environment_variance},
               {"wide_error_bars", rep.wide_error_bars}};
  r.criteria.push_back(c);
  return r;
}

inline CheckRecord check_collision_lln(const LlnParams& p, const Context& ctx) {
  CheckRecord r{"lem3"};
  r.parameters = {{"pairs", p.pairs}, {"n", p.n}, {"t", p.t}};
  std::uint64_t config_id = 0;
  for (const auto& dist : p.dists) {
    for (const auto& density : p.densities) {
      const std::uint64_t sub = derive_seed(ctx.master_seed, StreamRole::kEnvironment, 1000 + config_id++);
      const auto constants = LimitConstants::of(dist, density);
      std::vector<double> tau_ratio(p.pairs), time_ratio(p.pairs);
      std::vector<Trajectory> scratch(std::max(1u, ctx.threads));
      parallel_for(p.pairs, ctx.threads, [&](unsigned worker, std::size_t i) {
        Environment env(dist, derive_seed(sub, StreamRole::kEnvironment, i));
        RandomStream rng = make_stream(sub, StreamRole::kWalker, i);
        Trajectory& traj = scratch[worker];
        simulate_into(traj, env, density, p.t, rng);
        while (traj.steps() < p.n) traj.push(density.sample(rng), env);
        const std::uint64_t checkpoint[] = {p.n};
        tau_ratio[i] = lln_series(traj, checkpoint).front().ratio;
        time_ratio[i] = time_per_collision(traj, p.t);
      });
      // exact for deterministic unit gaps and a walk that always moves
      const bool exact = std::holds_alternative<Constant>(dist.family()) && density.lazy_mass() == 0.0;
      const double tol = exact ? 0.0 : p.relative_tolerance;
      const std::string label = dist.name() + (density.lazy_mass() > 0.0 ? "_lazy_srw" : "_srw");
      const auto a = mean_and_error(tau_ratio), b = mean_and_error(time_ratio);
      const double target = constants.collision_rate_target();
      Criterion ca{"tau_over_n_" + label, CriterionKind::kRelative, a.mean, target,
                   a.standard_error, tol};
      ca.details = {{"gaps", describe(dist)}, {"jumps", describe(density)}};
      Criterion cb{"t_over_n_of_t_" + label, CriterionKind::kRelative, b.mean, target,
                   b.standard_error, tol};
      cb.details = ca.details;
      r.criteria.push_back(ca);
      r.criteria.push_back(cb);
    }
  }
  return r;
}

inline CheckRecord check_jump_expectation(const JumpExpectationParams& p, const Context& ctx) {
  CheckRecord r{"lem4"};
  const auto constants = LimitConstants::of(p.dist, p.density);
  r.parameters = {{"gaps", describe(p.dist)}, {"jumps", describe(p.density)},
                  {"environment_seed", p.environment_seed}, {"n_list", p.n_list},
                  {"walkers", p.walkers}};
  Environment env(p.dist, p.environment_seed);
  const auto series =
      jump_length_expectation_series(env, p.density, p.n_list, p.walkers, ctx.master_seed, ctx.threads);
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : series)
    pts.push_back({{"n", pt.n}, {"mean", pt.mean}, {"std_error", pt.standard_error}});
  Criterion c{"final_point", CriterionKind::kRelative, series.back().mean,
              constants.collision_rate_target(), series.back().standard_error,
              p.relative_tolerance};
  c.details = {{"series", pts}};
  r.criteria.push_back(c);
  return r;
}

inline CheckRecord check_pvp(const PvpParams& p, const Context& ctx) {
  CheckRecord r{"corA1"};
  r.parameters = {{"stationarity_gaps", describe(p.stationarity_dist)},
                  {"jumps", describe(p.density)},
                  {"chains", p.chains},
                  {"chain_steps", p.chain_steps},
                  {"birkhoff_gaps", describe(p.birkhoff_dist)},
                  {"birkhoff_seeds", p.birkhoff_seeds},
                  {"birkhoff_steps", p.birkhoff_steps}};
  const auto st = pvp_stationarity_samples(p.stationarity_dist, p.density, p.chains,
                                           p.chain_steps, ctx.master_seed, ctx.threads);
  Criterion cs{"stationarity_ks", CriterionKind::kBelow, ks_two_sample(st.first, st.last), 0.0,
               std::sqrt(2.0 / static_cast<double>(p.chains)), p.ks_tolerance};
  r.criteria.push_back(cs);

  const std::uint64_t sub = derive_seed(ctx.master_seed, StreamRole::kChain, 7);
  std::vector<double> finals(p.birkhoff_seeds);
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t c = 10; c < p.birkhoff_steps; c *= 10) checkpoints.push_back(c);
  std::vector<BirkhoffSeries> all(p.birkhoff_seeds);
  parallel_for(p.birkhoff_seeds, ctx.threads, [&](unsigned, std::size_t s) {
    Environment env(p.birkhoff_dist, derive_seed(sub, StreamRole::kEnvironment, s));
    RandomStream rng = make_stream(sub, StreamRole::kChain, s);
    all[s] = birkhoff_average(env, p.density, p.birkhoff_steps, checkpoints, rng);
    finals[s] = all[s].final_average();
  });
  const double target = p.density.mean_abs_jump() * gap_mean(p.birkhoff_dist);
  const auto me = mean_and_error(finals);
  Criterion cm{"birkhoff_mean", CriterionKind::kRelative, me.mean, target, me.standard_error,
               p.mean_tolerance};
  cm.details = {{"final_averages", finals}};
  Criterion cv{"birkhoff_spread", CriterionKind::kBelow, std::sqrt(me.variance) / target, 0.0, 0.0,
               p.spread_tolerance};
  r.criteria.push_back(cm);
  r.criteria.push_back(cv);
  return r;
}

inline CheckRecord check_averaging(const AveragingParams& p, const Context&) {
  CheckRecord r{"lemA3"};
  r.parameters = {{"n_list", p.n_list}, {"density", "parity-smoothed SRW law"}};
  struct Case {
    AveragingProbe probe;
    double threshold;
    std::uint64_t threshold_from;  // threshold applies at every n >= this
  };
  const std::vector<Case> cases{
      {probes::constant(p.constant_value), p.constant_threshold, 0},
      {probes::alternating(), p.alternating_threshold, 10'000},
      {probes::decaying(p.decaying_limit), p.decaying_threshold, p.n_list.back()}};
  for (const auto& c : cases) {
    const auto pts = averaging_check(c.probe, p.n_list);
    nlohmann::json series = nlohmann::json::array();
    std::vector<double> errors;
    double worst = 0.0;
    for (const auto& pt : pts) {
      series.push_back({{"n", pt.n}, {"value", pt.value}, {"abs_error", pt.abs_error}});
      errors.push_back(pt.abs_error);
      if (pt.n >= c.threshold_from) worst = std::max(worst, pt.abs_error);
    }
    int monotone = 0;
    for (std::size_t i = 1; i < errors.size(); ++i)
      if (errors[i] <= errors[i - 1] + p.monotone_slack) ++monotone;
    Criterion cd{c.probe.name + "_decreasing", CriterionKind::kAtLeast,
                 static_cast<double>(monotone), static_cast<double>(errors.size() - 1), 0.0,
                 static_cast<double>(errors.size() - 1)};
    cd.details = {{"series", series}};
    Criterion ct{c.probe.name + "_threshold", CriterionKind::kBelow, worst, c.probe.cesaro_limit,
                 0.0, c.threshold};
    ct.details = {{"from_n", c.threshold_from}};
    r.criteria.push_back(cd);
    r.criteria.push_back(ct);
  }
  const auto w = srw_smoothed_density(10'000);
  Criterion cm{"central_mass_r5_n1e4", CriterionKind::kBelow, w.central_mass(5), 0.0, 0.0, 0.05};
  r.criteria.push_back(cm);
  return r;
}

inline CheckRecord check_lazy_invariance(const LazyParams& p, const Context& ctx) {
  CheckRecord r{"remark1"};
  const auto stripped = remove_lazy(p.lazy_density).density;
  r.parameters = {{"gaps", describe(p.dist)},          {"lazy_jumps", describe(p.lazy_density)},
                  {"environment_seed", p.environment_seed}, {"samples", p.samples},
                  {"t", p.t}};

  double worst = 0.0;
  {
    Environment env(p.dist, p.environment_seed);
    const std::uint64_t sub = derive_seed(ctx.master_seed, StreamRole::kWalker, 99);
    for (std::size_t i = 0; i < p.path_trajectories; ++i) {
      RandomStream rng = make_stream(sub, StreamRole::kWalker, i);
      const auto traj = simulate(env, p.lazy_density, p.path_t_max, rng);
      const auto thin = strip_lazy(traj);
      for (std::size_t k = 0; k < p.path_times; ++k) {
        const double t = rng.uniform() * p.path_t_max;
        worst = std::max(worst, std::fabs(position_at(traj, t) - position_at(thin, t)));
      }
    }
  }
  r.criteria.push_back({"strip_lazy_path_identity", CriterionKind::kAbsolute, worst, 0.0, 0.0,
                        p.path_tolerance});

  BatchSpec lazy{p.dist, p.lazy_density};
  lazy.master_seed = ctx.master_seed;
  lazy.environment_seed = p.environment_seed;
  lazy.walkers = p.samples;
  lazy.times = {p.t};
  lazy.threads = ctx.threads;
  BatchSpec brisk = lazy;
  brisk.density = stripped;
  brisk.walker_offset = p.samples;  // independent walker streams
  const auto a = positions_at(run_batch(lazy), 0);
  const auto b = positions_at(run_batch(brisk), 0);
  r.criteria.push_back({"lazy_invariance_ks", CriterionKind::kBelow, ks_two_sample(a, b), 0.0,
                        std::sqrt(2.0 / static_cast<double>(p.samples)), p.ks_tolerance});
  return r;
}

inline CheckRecord check_lazy_scaling(const AlgebraParams& p, const Context&) {
  CheckRecord r{"remark2"};
  r.parameters = {{"densities", p.densities.size()}, {"q_list", p.q_list}};
  double worst_mj = 0.0, worst_v = 0.0, worst_mq = 0.0;
  auto rel = [](double a, double b) { return std::fabs(a / b - 1.0); };
  for (const auto& d : p.densities) {
    const auto [thin, eta] = remove_lazy(d);
    worst_mj = std::max(worst_mj, rel(thin.mean_abs_jump(), eta * d.mean_abs_jump()));
    worst_v = std::max(worst_v, rel(thin.variance(), eta * d.variance()));
    for (double q : p.q_list)
      worst_mq = std::max(worst_mq, rel(thin.moments().moment(q),
                                        std::pow(eta, 0.5 * q) * d.moments().moment(q)));
  }
  r.criteria.push_back({"mean_abs_jump_scaling", CriterionKind::kAbsolute, worst_mj, 0.0, 0.0,
                        p.tolerance});
  r.criteria.push_back({"variance_scaling", CriterionKind::kAbsolute, worst_v, 0.0, 0.0,
                        p.tolerance});
  r.criteria.push_back({"gaussian_moment_scaling", CriterionKind::kAbsolute, worst_mq, 0.0, 0.0,
                        p.tolerance});
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& supported_checks() {
  static const std::vector<std::string> ids{"thm1",  "thm2", "cor1",  "cor2",    "lem3",
                                            "lem4",  "corA1", "lemA3", "remark1", "remark2"};
  return ids;
}

inline bool is_supported(const std::string& id) {
  const auto& ids = supported_checks();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline CheckRecord run_check(const std::string& id, const Params& p, const Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord r;
  if (id == "thm1") r = check_quenched_clt(p.thm1, ctx);
  else if (id == "thm2") r = check_moments(p.thm2, ctx);
  else if (id == "cor1") r = check_annealed_clt(p.cor1, ctx);
  else if (id == "cor2") r = check_annealed_bound(p.cor2, ctx);
  else if (id == "lem3") r = check_collision_lln(p.lem3, ctx);
  else if (id == "lem4") r = check_jump_expectation(p.lem4, ctx);
  else if (id == "corA1") r = check_pvp(p.cor_a1, ctx);
  else if (id == "lemA3") r = check_averaging(p.lem_a3, ctx);
  else if (id == "remark1") r = check_lazy_invariance(p.remark1, ctx);
  else if (id == "remark2") r = check_lazy_scaling(p.remark2, ctx);
  else throw ConfigError("unknown check '" + id + "'");
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace levyrw::verify

#endif  // LEVYRW_VERIFY_HPP
