#ifndef LEVYRW_BATCH_HPP
#define LEVYRW_BATCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "levyrw/environment.hpp"
#include "levyrw/jump_density.hpp"
#include "levyrw/parallel.hpp"
#include "levyrw/random.hpp"
#include "levyrw/trajectory.hpp"

namespace levyrw {

/// Quenched: every walker shares one environment. Annealed: walker w gets a
/// fresh environment seeded from (master, environment, w).
enum class Mode { kQuenched, kAnnealed };

struct BatchSpec {
  GapDistribution dist;
  JumpDensity density;
  Mode mode = Mode::kQuenched;
  std::uint64_t master_seed = 0;
  /// Quenched environment seed; defaults to (master, environment, 0).
  std::optional<std::uint64_t> environment_seed;
  std::size_t walkers = 1;
  /// Evaluation times, increasing; the walk runs until it passes the last.
  std::vector<double> times;
  unsigned threads = 1;
  /// Optional index offset so disjoint batches can share a master seed.
  std::uint64_t walker_offset = 0;

  std::uint64_t quenched_seed() const {
    return environment_seed.value_or(derive_seed(master_seed, StreamRole::kEnvironment, 0));
  }
};

/// results[w][i] is walker w evaluated at times[i].
using BatchResults = std::vector<std::vector<WalkerResult>>;

inline BatchResults run_batch(const BatchSpec& spec) {
  if (spec.times.empty()) throw ConfigError("batch needs at least one evaluation time");
  const double t_max = spec.times.back();
  BatchResults results(spec.walkers, std::vector<WalkerResult>(spec.times.size()));
  std::vector<Trajectory> scratch(std::max(1u, spec.threads));

  auto run_walker = [&](unsigned worker, std::size_t w, Environment& env) {
    RandomStream rng = make_stream(spec.master_seed, StreamRole::kWalker, spec.walker_offset + w);
    Trajectory& traj = scratch[worker];
    simulate_into(traj, env, spec.density, t_max, rng);
    for (std::size_t i = 0; i < spec.times.size(); ++i) results[w][i] = evaluate(traj, spec.times[i]);
  };

  if (spec.mode == Mode::kQuenched) {
    Environment env(spec.dist, spec.quenched_seed());
    env.extend_to_cover(t_max, spec.density.radius());
    env.freeze();
    parallel_for(spec.walkers, spec.threads,
                 [&](unsigned worker, std::size_t w) { run_walker(worker, w, env); });
  } else {
    parallel_for(spec.walkers, spec.threads, [&](unsigned worker, std::size_t w) {
      Environment env(spec.dist,
                      derive_seed(spec.master_seed, StreamRole::kEnvironment, spec.walker_offset + w));
      run_walker(worker, w, env);
    });
  }
  return results;
}

/// Column i of a batch: X(times[i]) for every walker.
inline std::vector<double> positions_at(const BatchResults& results, std::size_t i) {
  std::vector<double> xs;
  xs.reserve(results.size());
  for (const auto& r : results) xs.push_back(r[i].x_value);
  return xs;
}

}  // namespace levyrw

#endif  // LEVYRW_BATCH_HPP
