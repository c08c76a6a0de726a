#ifndef LEVYRW_PVP_HPP
#define LEVYRW_PVP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "levyrw/environment.hpp"
#include "levyrw/jump_density.hpp"
#include "levyrw/parallel.hpp"
#include "levyrw/random.hpp"
#include "levyrw/summation.hpp"

namespace levyrw {

/// State of the skew map T(xi, zeta) = (shift(xi), shift^{xi_1}(zeta)) seen
/// from the particle. The jump stream is consumed through a cursor and the
/// environment shift is kept as an index offset into a shared Environment,
/// so one step costs O(1) and nothing is copied.
struct PvpState {
  Environment* env = nullptr;
  std::uint64_t xi_cursor = 0;  // jumps consumed so far
  std::int64_t env_offset = 0;  // k* : the current environment is shift^{k*}(zeta)

  /// Gap j of the translated environment: zeta_{j + k*} of the base one.
  double translated_gap(std::int64_t j) const { return env->gap(j + env_offset); }

  /// omega_j of the translated environment (origin moved to the particle).
  double translated_target(std::int64_t j) const {
    return env->target(j + env_offset) - env->target(env_offset);
  }
};

struct PvpStep {
  PvpState state;
  double observable;  // f = |omega_{xi_1}| in translated coordinates
};

/// Applies T with the given first jump.
inline PvpStep pvp_apply(PvpState state, std::int64_t xi) {
  Environment& env = *state.env;
  const double f = std::fabs(env.target(state.env_offset + xi) - env.target(state.env_offset));
  state.env_offset += xi;
  ++state.xi_cursor;
  return {state, f};
}

inline PvpStep pvp_step(PvpState state, const JumpDensity& p, RandomStream& rng) {
  return pvp_apply(state, p.sample(rng));
}

/// Running Birkhoff averages (1/n) sum_{m<n} f(T^m x) at checkpoint steps.
struct BirkhoffSeries {
  std::string observable = "jump_length";
  std::vector<std::uint64_t> checkpoints;
  std::vector<double> averages;
  double target = 0.0;  // m_j mu

  double final_average() const { return averages.empty() ? 0.0 : averages.back(); }
};

/// Iterates T n_steps times from (xi-stream, offset 0). Checkpoints beyond
/// n_steps are dropped; n_steps itself is always recorded.
inline BirkhoffSeries birkhoff_average(Environment& env, const JumpDensity& p,
                                       std::uint64_t n_steps,
                                       std::vector<std::uint64_t> checkpoints,
                                       RandomStream& rng) {
  if (n_steps < 1) throw ConfigError("birkhoff_average needs n_steps >= 1");
  std::erase_if(checkpoints, [&](std::uint64_t c) { return c == 0 || c > n_steps; });
  checkpoints.push_back(n_steps);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

  BirkhoffSeries series;
  series.target = p.mean_abs_jump() * gap_mean(env.distribution());
  series.checkpoints = checkpoints;
  PvpState state{&env};
  CompensatedSum sum;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= n_steps; ++n) {
    auto [s, f] = pvp_step(state, p, rng);
    state = s;
    sum += f;
    if (n == checkpoints[next]) {
      series.averages.push_back(sum.value() / static_cast<double>(n));
      ++next;
    }
  }
  return series;
}

struct ExpectationPoint {
  std::uint64_t n = 0;
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Monte Carlo estimate, in the fixed environment env, of
/// E|omega_{S_{n+1}} - omega_{S_n}| for each n in n_list. Walker w draws its
/// jumps from the substream (master_seed, walker, w), so the result does not
/// depend on `threads`. env is pre-extended over every reachable index.
inline std::vector<ExpectationPoint> jump_length_expectation_series(
    Environment& env, const JumpDensity& p, std::vector<std::uint64_t> n_list,
    std::size_t walkers, std::uint64_t master_seed, unsigned threads = 1) {
  if (walkers < 1) throw ConfigError("need at least one walker");
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  if (n_list.empty()) return {};
  const std::uint64_t last = n_list.back() + 1;
  const auto reach = static_cast<std::int64_t>(last) * p.radius() + 1;
  env.extend_to(-reach, reach);

  std::vector<std::vector<double>> obs(n_list.size(), std::vector<double>(walkers));
  parallel_for(walkers, threads, [&](unsigned, std::size_t w) {
    RandomStream rng = make_stream(master_seed, StreamRole::kWalker, w);
    PvpState state{&env};
    std::size_t next = 0;
    for (std::uint64_t step = 1; step <= last; ++step) {
      auto [s, f] = pvp_step(state, p, rng);
      state = s;
      // step m + 1 produces the (m+1)-th jump length |omega_{S_{m+1}} - omega_{S_m}|
      if (step == n_list[next] + 1) obs[next++][w] = f;
    }
  });

  std::vector<ExpectationPoint> out;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const auto me = mean_and_error(obs[i]);
    out.push_back({n_list[i], me.mean, me.standard_error});
  }
  return out;
}

struct StationaritySamples {
  std::vector<double> first;  // f at step 1
  std::vector<double> last;   // f at step `steps`
};

/// Annealed PVP chains: chain c runs on a fresh environment seeded from
/// (master, environment, c) with jumps from (master, chain, c).
inline StationaritySamples pvp_stationarity_samples(const GapDistribution& dist,
                                                    const JumpDensity& p, std::size_t chains,
                                                    std::uint64_t steps,
                                                    std::uint64_t master_seed,
                                                    unsigned threads = 1) {
  if (steps < 1) throw ConfigError("stationarity needs at least one step");
  StationaritySamples out{std::vector<double>(chains), std::vector<double>(chains)};
  parallel_for(chains, threads, [&](unsigned, std::size_t c) {
    Environment env(dist, derive_seed(master_seed, StreamRole::kEnvironment, c));
    RandomStream rng = make_stream(master_seed, StreamRole::kChain, c);
    PvpState state{&env};
    for (std::uint64_t n = 1; n <= steps; ++n) {
      auto [s, f] = pvp_step(state, p, rng);
      state = s;
      if (n == 1) out.first[c] = f;
      if (n == steps) out.last[c] = f;
    }
  });
  return out;
}

}  // namespace levyrw

#endif  // LEVYRW_PVP_HPP
