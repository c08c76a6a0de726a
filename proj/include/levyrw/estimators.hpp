#ifndef LEVYRW_ESTIMATORS_HPP
#define LEVYRW_ESTIMATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levyrw/batch.hpp"
#include "levyrw/environment.hpp"
#include "levyrw/error.hpp"
#include "levyrw/jump_density.hpp"
#include "levyrw/summation.hpp"
#include "levyrw/trajectory.hpp"

namespace levyrw {

/// Constants the limit theorems are stated in: mean gap mu, mean absolute
/// jump m_j and jump variance m_2 = v_p.
struct LimitConstants {
  double mu;
  double mean_abs_jump;
  double jump_variance;

  static LimitConstants of(const GapDistribution& dist, const JumpDensity& p) {
    return {gap_mean(dist), p.mean_abs_jump(), p.variance()};
  }

  /// Variance of the limiting Gaussian of X(t) / sqrt(t): (mu / m_j) m_2.
  double diffusion_variance() const { return mu / mean_abs_jump * jump_variance; }

  /// (mu / m_j)^{q/2} m_q.
  double moment_target(double q) const {
    return std::pow(mu / mean_abs_jump, 0.5 * q) * gaussian_abs_moment(q, jump_variance);
  }

  /// m_j mu, the almost-sure limit of tau(n) / n and of t / n(t).
  double collision_rate_target() const { return mean_abs_jump * mu; }
};

// ---------------------------------------------------------------------------
// Rescaled moments
// ---------------------------------------------------------------------------

struct MomentReport {
  double q = 0.0;
  double t = 0.0;
  double quenched_estimate = 0.0;
  double standard_error = 0.0;
  std::optional<double> signed_estimate;  // odd integer q only
  std::optional<double> signed_standard_error;
  double target = 0.0;
};

inline bool is_odd_integer(double q) {
  return q == std::floor(q) && std::fmod(q, 2.0) == 1.0;
}

/// Mean of |x|^q / t^{q/2} over the samples, plus x^q / t^{q/2} for odd q.
/// Standard errors are jackknife estimates (for a mean: s / sqrt(N)).
inline MomentReport rescaled_moment(std::span<const double> samples, double t, double q,
                                    const LimitConstants& constants) {
  if (samples.size() < 2) throw InsufficientSamples("rescaled_moment needs >= 2 samples");
  if (!(t > 0.0) || !(q >= 0.0)) throw ConfigError("rescaled_moment needs t > 0 and q >= 0");
  MomentReport r;
  r.q = q;
  r.t = t;
  r.target = constants.moment_target(q);
  const double scale = std::pow(t, 0.5 * q);
  std::vector<double> v(samples.size());
  if (q == 0.0) {
    r.quenched_estimate = 1.0;
    r.standard_error = 0.0;
  } else {
    std::transform(samples.begin(), samples.end(), v.begin(),
                   [&](double x) { return std::pow(std::fabs(x), q) / scale; });
    const auto me = mean_and_error(v);
    r.quenched_estimate = me.mean;
    r.standard_error = me.standard_error;
  }
  if (is_odd_integer(q)) {
    std::transform(samples.begin(), samples.end(), v.begin(),
                   [&](double x) { return std::pow(x, q) / scale; });
    const auto me = mean_and_error(v);
    r.signed_estimate = me.mean;
    r.signed_standard_error = me.standard_error;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Gaussian distance
// ---------------------------------------------------------------------------

/// CDF of N(0, variance).
inline double normal_cdf(double x, double variance = 1.0) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance));
}

/// sup_x |F_N(x) - Phi_variance(x)| for the empirical CDF F_N of the
/// (already rescaled) samples.
inline double ks_distance(std::span<const double> samples, double variance) {
  if (samples.size() < 10) throw InsufficientSamples("ks_distance needs >= 10 samples");
  if (!(variance > 0.0)) throw ConfigError("ks_distance needs variance > 0");
  std::vector<double> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const auto n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = normal_cdf(xs[i], variance);
    // ties: the step at xs[i] only completes at the last equal sample
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(j + 1) / n - f});
    i = j;
  }
  return d;
}

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
inline double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InsufficientSamples("ks_two_sample needs samples");
  std::vector<double> xa(a.begin(), a.end()), xb(b.begin(), b.end());
  std::sort(xa.begin(), xa.end());
  std::sort(xb.begin(), xb.end());
  const auto na = static_cast<double>(xa.size()), nb = static_cast<double>(xb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xa.size() && j < xb.size()) {
    const double x = std::min(xa[i], xb[j]);
    while (i < xa.size() && xa[i] == x) ++i;
    while (j < xb.size() && xb[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

struct CltReport {
  double t = 0.0;
  std::size_t sample_count = 0;
  double ks_distance = 0.0;
  double target_variance = 0.0;
};

/// KS distance of {X(t) / sqrt(t)} from N(0, (mu / m_j) m_2).
inline CltReport clt_report(std::span<const double> positions, double t,
                            const LimitConstants& constants) {
  std::vector<double> scaled(positions.begin(), positions.end());
  const double root = std::sqrt(t);
  for (double& x : scaled) x /= root;
  CltReport r;
  r.t = t;
  r.sample_count = scaled.size();
  r.target_variance = constants.diffusion_variance();
  r.ks_distance = ks_distance(scaled, r.target_variance);
  return r;
}

// ---------------------------------------------------------------------------
// Collision-time laws of large numbers
// ---------------------------------------------------------------------------

struct LlnPoint {
  std::uint64_t n = 0;
  double ratio = 0.0;  // tau(n) / n
};

inline std::vector<LlnPoint> lln_series(const Trajectory& traj,
                                        std::span<const std::uint64_t> checkpoints) {
  std::vector<LlnPoint> out;
  for (auto n : checkpoints) {
    if (n == 0 || n > traj.steps())
      throw ConfigError("checkpoint " + std::to_string(n) + " outside trajectory");
    out.push_back({n, traj.collision_times[n] / static_cast<double>(n)});
  }
  return out;
}

/// t / n(t).
inline double time_per_collision(const Trajectory& traj, double t) {
  const auto n = collisions_up_to(traj, t);
  if (n == 0) throw InsufficientSamples("no collision by time " + std::to_string(t));
  return t / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Annealed second moment
// ---------------------------------------------------------------------------

struct AnnealedConfig {
  GapDistribution dist;
  JumpDensity density;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
};

struct AnnealedReport {
  double estimate = 0.0;        // grand mean of X(t)^2 / t
  double standard_error = 0.0;  // from the spread of per-environment means
  double between_environment_variance = 0.0;
  double mean_within_environment_variance = 0.0;
  double lower_bound = 0.0;  // (mu / m_j) m_2
  bool wide_error_bars = false;
};

/// Environment e is seeded from (master, environment, e); its walkers use
/// walker substreams e * walkers_per_env + w.
inline AnnealedReport annealed_second_moment(std::size_t env_count, std::size_t walkers_per_env,
                                             double t, const AnnealedConfig& config) {
  if (env_count < 2) throw ConfigError("annealed_second_moment needs >= 2 environments");
  if (walkers_per_env < 1) throw ConfigError("need at least one walker per environment");
  std::vector<double> env_means(env_count), env_vars(env_count);
  for (std::size_t e = 0; e < env_count; ++e) {
    BatchSpec spec{config.dist, config.density};
    spec.mode = Mode::kQuenched;
    spec.master_seed = config.master_seed;
    spec.environment_seed = derive_seed(config.master_seed, StreamRole::kEnvironment, e);
    spec.walkers = walkers_per_env;
    spec.walker_offset = e * walkers_per_env;
    spec.times = {t};
    spec.threads = config.threads;
    auto xs = positions_at(run_batch(spec), 0);
    for (double& x : xs) x = x * x / t;
    const auto me = mean_and_error(xs);
    env_means[e] = me.mean;
    env_vars[e] = me.variance;
  }
  const auto grand = mean_and_error(env_means);
  AnnealedReport r;
  r.estimate = grand.mean;
  r.standard_error = grand.standard_error;
  r.between_environment_variance = grand.variance;
  r.mean_within_environment_variance = compensated_mean(env_vars);
  r.lower_bound = LimitConstants::of(config.dist, config.density).diffusion_variance();
  r.wide_error_bars = walkers_per_env < 2 || r.standard_error > 0.1 * std::fabs(r.estimate);
  return r;
}

}  // namespace levyrw

#endif  // LEVYRW_ESTIMATORS_HPP
