#ifndef LEVYRW_TRAJECTORY_HPP
#define LEVYRW_TRAJECTORY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "levyrw/environment.hpp"
#include "levyrw/error.hpp"
#include "levyrw/jump_density.hpp"
#include "levyrw/random.hpp"

namespace levyrw {

/// Realised walk: jumps xi_1..xi_n, index walk S_0..S_n, targets
/// Y_m = omega_{S_m} and collision times tau(m) = sum |Y_i - Y_{i-1}|.
///
/// jumps[i] holds xi_{i+1}; the other arrays are indexed by m directly and
/// always have one more entry than jumps.
struct Trajectory {
  std::vector<std::int64_t> jumps;
  std::vector<std::int64_t> positions{0};
  std::vector<double> targets_hit{0.0};
  std::vector<double> collision_times{0.0};

  std::size_t steps() const noexcept { return jumps.size(); }
  double horizon() const noexcept { return collision_times.back(); }

  void clear() {
    jumps.clear();
    positions.assign(1, 0);
    targets_hit.assign(1, 0.0);
    collision_times.assign(1, 0.0);
  }

  void reserve(std::size_t n) {
    jumps.reserve(n);
    positions.reserve(n + 1);
    targets_hit.reserve(n + 1);
    collision_times.reserve(n + 1);
  }

  void push(std::int64_t xi, Environment& env) {
    const std::int64_t s = positions.back() + xi;
    const double y = env.target(s);
    const double tau = collision_times.back() + std::fabs(y - targets_hit.back());
    jumps.push_back(xi);
    positions.push_back(s);
    targets_hit.push_back(y);
    collision_times.push_back(tau);
  }
};

/// X(t), n(t) and bookkeeping for one walker at one evaluation time.
struct WalkerResult {
  double t_eval = 0.0;
  double x_value = 0.0;
  std::int64_t n_of_t = 0;
  std::int64_t steps_taken = 0;
};

/// Runs the walk until tau(n) > t_max. With t_max = 0 nothing is simulated.
/// `out` is cleared first, so a buffer can be reused across walkers.
inline void simulate_into(Trajectory& out, Environment& env, const JumpDensity& p, double t_max,
                          RandomStream& rng) {
  if (!(t_max >= 0.0)) throw TimeOutOfRange("t_max must be >= 0");
  out.clear();
  if (t_max == 0.0) return;
  while (out.horizon() <= t_max) out.push(p.sample(rng), env);
}

inline Trajectory simulate(Environment& env, const JumpDensity& p, double t_max,
                           RandomStream& rng) {
  Trajectory traj;
  simulate_into(traj, env, p, t_max, rng);
  return traj;
}

/// Runs exactly n_steps jumps.
inline void simulate_steps_into(Trajectory& out, Environment& env, const JumpDensity& p,
                                std::size_t n_steps, RandomStream& rng) {
  out.clear();
  out.reserve(n_steps);
  for (std::size_t i = 0; i < n_steps; ++i) out.push(p.sample(rng), env);
}

/// Trajectory driven by a prescribed jump sequence.
inline Trajectory simulate_jumps(Environment& env, std::span<const std::int64_t> jumps) {
  Trajectory traj;
  traj.reserve(jumps.size());
  for (auto xi : jumps) traj.push(xi, env);
  return traj;
}

/// n(t) = max { m : tau(m) <= t }. Across a flat run of tau (self-jumps) the
/// largest index is returned.
inline std::int64_t collisions_up_to(const Trajectory& traj, double t) {
  if (!(t >= 0.0) || t > traj.horizon())
    throw TimeOutOfRange("t = " + std::to_string(t) + " outside [0, " +
                         std::to_string(traj.horizon()) + "]");
  const auto& tau = traj.collision_times;
  const auto it = std::upper_bound(tau.begin(), tau.end(), t);
  return static_cast<std::int64_t>(it - tau.begin()) - 1;
}

/// X(t) = Y_n + sgn(xi_{n+1}) (t - tau(n)) with n = n(t), sgn(0) = 0.
inline double position_at(const Trajectory& traj, double t) {
  const auto n = static_cast<std::size_t>(collisions_up_to(traj, t));
  const double y = traj.targets_hit[n];
  if (n >= traj.jumps.size()) return y;
  const std::int64_t xi = traj.jumps[n];
  const double dt = t - traj.collision_times[n];
  return xi > 0 ? y + dt : (xi < 0 ? y - dt : y);
}

/// Overload matching the environment-aware call form; the trajectory already
/// carries every target it visits.
inline double position_at(const Trajectory& traj, const Environment& /*env*/, double t) {
  return position_at(traj, t);
}

inline WalkerResult evaluate(const Trajectory& traj, double t) {
  WalkerResult r;
  r.t_eval = t;
  r.n_of_t = collisions_up_to(traj, t);
  r.x_value = position_at(traj, t);
  r.steps_taken = static_cast<std::int64_t>(traj.steps());
  return r;
}

/// Removes the self-jumps. The continuous path t -> X(t) is unchanged.
inline Trajectory strip_lazy(const Trajectory& traj) {
  Trajectory out;
  out.reserve(traj.steps());
  for (std::size_t i = 0; i < traj.jumps.size(); ++i) {
    if (traj.jumps[i] == 0) continue;
    out.jumps.push_back(traj.jumps[i]);
    out.positions.push_back(traj.positions[i + 1]);
    out.targets_hit.push_back(traj.targets_hit[i + 1]);
    out.collision_times.push_back(traj.collision_times[i + 1]);
  }
  return out;
}

/// Geometric evaluation grid t_max 2^{-j}, j = levels-1 .. 0, increasing.
inline std::vector<double> geometric_grid(double t_max, int levels) {
  std::vector<double> grid;
  for (int j = levels - 1; j >= 0; --j) grid.push_back(std::ldexp(t_max, -j));
  return grid;
}

}  // namespace levyrw

#endif  // LEVYRW_TRAJECTORY_HPP
