#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "levyrw/batch.hpp"
#include "levyrw/estimators.hpp"
#include "levyrw/trajectory.hpp"

using namespace levyrw;

namespace {

const GapDistribution kUnit{Constant{1.0}};

Environment worked_environment() {
  // (zeta_1, zeta_2) = (1.5, 1.0)
  return Environment(GapDistribution{Pareto{1.5, 1.0}}, 1, {1.5, 1.0});
}

template <class T>
std::vector<T> vec(std::initializer_list<T> xs) {
  return std::vector<T>(xs);
}

}  // namespace

TEST(Simulate, UnitLatticeByHand) {
  Environment env(kUnit, 1);
  const std::vector<std::int64_t> xi{1, 1, -1};
  const auto t = simulate_jumps(env, xi);
  EXPECT_EQ(t.positions, vec<std::int64_t>({0, 1, 2, 1}));
  EXPECT_EQ(t.targets_hit, vec<double>({0, 1, 2, 1}));
  EXPECT_EQ(t.collision_times, vec<double>({0, 1, 2, 3}));
}

TEST(Simulate, SelfJumpsNeverAdvanceTime) {
  Environment env(kUnit, 1);
  const std::vector<std::int64_t> xi(50, 0);
  const auto t = simulate_jumps(env, xi);
  for (double tau : t.collision_times) EXPECT_EQ(tau, 0.0);
}

TEST(Simulate, RecordedGapsByHand) {
  Environment env = worked_environment();
  const std::vector<std::int64_t> xi{2, -1};
  const auto t = simulate_jumps(env, xi);
  EXPECT_EQ(t.targets_hit, vec<double>({0, 2.5, 1.5}));
  EXPECT_EQ(t.collision_times, vec<double>({0, 2.5, 3.5}));
}

TEST(Simulate, StopsJustPastHorizon) {
  Environment env(GapDistribution{Exponential{1.0}}, 4);
  RandomStream rng(10);
  const auto t = simulate(env, JumpDensity::lazy_simple_symmetric(), 500.0, rng);
  ASSERT_GE(t.steps(), 1u);
  EXPECT_GT(t.horizon(), 500.0);
  EXPECT_LE(t.collision_times[t.steps() - 1], 500.0);
}

TEST(Simulate, ZeroHorizonSimulatesNothing) {
  Environment env(kUnit, 4);
  RandomStream rng(10);
  const auto t = simulate(env, JumpDensity::simple_symmetric(), 0.0, rng);
  EXPECT_EQ(t.steps(), 0u);
  EXPECT_EQ(position_at(t, 0.0), 0.0);
  EXPECT_THROW(simulate(env, JumpDensity::simple_symmetric(), -1.0, rng), TimeOutOfRange);
}

TEST(Simulate, TrajectoryInvariantsHold) {
  Environment env(GapDistribution{Pareto{1.3, 0.5}}, 21);
  RandomStream rng(22);
  const auto p = JumpDensity::validate({{-2, 0.1}, {-1, 0.2}, {0, 0.4}, {1, 0.2}, {2, 0.1}});
  const auto t = simulate(env, p, 2000.0, rng);
  for (std::size_t n = 1; n <= t.steps(); ++n) {
    ASSERT_EQ(t.positions[n], t.positions[n - 1] + t.jumps[n - 1]);
    ASSERT_EQ(t.targets_hit[n], env.target(t.positions[n]));
    ASSERT_EQ(t.collision_times[n] - t.collision_times[n - 1] == 0.0, t.jumps[n - 1] == 0);
    ASSERT_GE(t.collision_times[n], t.collision_times[n - 1]);
  }
}

TEST(PositionAt, WorkedTrajectory) {
  Environment env = worked_environment();
  const std::vector<std::int64_t> xi{2, -1};
  const auto t = simulate_jumps(env, xi);
  EXPECT_EQ(position_at(t, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(position_at(t, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(position_at(t, 2.5), 2.5);
  EXPECT_DOUBLE_EQ(position_at(t, env, 3.0), 2.0);
  EXPECT_DOUBLE_EQ(position_at(t, 3.5), 1.5);
  EXPECT_THROW(position_at(t, 3.6), TimeOutOfRange);
  EXPECT_THROW(position_at(t, -0.1), TimeOutOfRange);
}

TEST(PositionAt, PinsTargetsAtCollisionTimes) {
  Environment env(GapDistribution{Exponential{0.7}}, 5);
  RandomStream rng(6);
  const auto t = simulate(env, JumpDensity::lazy_simple_symmetric(), 300.0, rng);
  for (std::size_t n = 0; n <= t.steps(); ++n)
    ASSERT_DOUBLE_EQ(position_at(t, t.collision_times[n]), t.targets_hit[n]) << n;
}

TEST(PositionAt, UnitSpeedBound) {
  Environment env(GapDistribution{Pareto{1.5, 1.0}}, 8);
  RandomStream rng(9);
  const auto t = simulate(env, JumpDensity::simple_symmetric(), 1000.0, rng);
  RandomStream pick(10);
  for (int i = 0; i < 10'000; ++i) {
    const double a = pick.uniform() * t.horizon(), b = pick.uniform() * t.horizon();
    ASSERT_LE(std::fabs(position_at(t, a) - position_at(t, b)), std::fabs(a - b) + 1e-9);
  }
}

TEST(CollisionsUpTo, UnitLatticeIsFloor) {
  Environment env(kUnit, 1);
  const std::vector<std::int64_t> xi(100, 1);
  const auto t = simulate_jumps(env, xi);
  for (double s : {0.0, 0.3, 1.0, 7.99, 8.0, 42.5, 100.0})
    EXPECT_EQ(collisions_up_to(t, s), static_cast<std::int64_t>(std::floor(s))) << s;
}

TEST(CollisionsUpTo, WorkedTrajectory) {
  Environment env = worked_environment();
  const std::vector<std::int64_t> xi{2, -1};
  const auto t = simulate_jumps(env, xi);
  EXPECT_EQ(collisions_up_to(t, 3.0), 1);
  EXPECT_EQ(collisions_up_to(t, 0.0), 0);
  EXPECT_EQ(collisions_up_to(t, 3.5), 2);
  EXPECT_THROW(collisions_up_to(t, 4.0), TimeOutOfRange);
}

TEST(CollisionsUpTo, FlatRunsResolveToLargestIndex) {
  Environment env(kUnit, 1);
  const std::vector<std::int64_t> xi{0, 1, 0, 0, 1};
  const auto t = simulate_jumps(env, xi);
  // tau = 0, 0, 1, 1, 1, 2
  EXPECT_EQ(collisions_up_to(t, 0.0), 1);
  EXPECT_EQ(collisions_up_to(t, 1.0), 4);
  EXPECT_EQ(collisions_up_to(t, 1.5), 4);
  EXPECT_DOUBLE_EQ(position_at(t, 1.5), 1.5);
}

TEST(WalkerResult, InterpolationStaysWithinCurrentLeg) {
  Environment env(GapDistribution{Pareto{1.5, 1.0}}, 12);
  RandomStream rng(13);
  const auto t = simulate(env, JumpDensity::lazy_simple_symmetric(), 5000.0, rng);
  for (double s = 0.0; s <= 5000.0; s += 7.3) {
    const auto r = evaluate(t, s);
    const auto n = static_cast<std::size_t>(r.n_of_t);
    const double leg = n < t.steps() ? t.collision_times[n + 1] - t.collision_times[n] : 0.0;
    ASSERT_LE(std::fabs(r.x_value - t.targets_hit[n]), leg + 1e-9);
  }
}

TEST(StripLazy, RemovesSelfJumpsAndKeepsPath) {
  Environment env(GapDistribution{Exponential{1.0}}, 2);
  const std::vector<std::int64_t> xi{1, 0, -1};
  const auto t = simulate_jumps(env, xi);
  const auto s = strip_lazy(t);
  EXPECT_EQ(s.jumps, vec<std::int64_t>({1, -1}));
  for (int i = 0; i <= 100; ++i) {
    const double at = t.horizon() * i / 100.0;
    EXPECT_EQ(position_at(t, at), position_at(s, at)) << at;
  }
}

TEST(StripLazy, NoSelfJumpsIsIdentity) {
  Environment env(kUnit, 2);
  const std::vector<std::int64_t> xi{1, 1, -1, 1};
  const auto t = simulate_jumps(env, xi);
  const auto s = strip_lazy(t);
  EXPECT_EQ(s.jumps, t.jumps);
  EXPECT_EQ(s.positions, t.positions);
  EXPECT_EQ(s.collision_times, t.collision_times);
}

TEST(StripLazy, AllSelfJumpsLeavesTheOrigin) {
  Environment env(kUnit, 2);
  const std::vector<std::int64_t> xi{0, 0, 0};
  const auto s = strip_lazy(simulate_jumps(env, xi));
  EXPECT_TRUE(s.jumps.empty());
  EXPECT_EQ(s.horizon(), 0.0);
  EXPECT_EQ(position_at(s, 0.0), 0.0);
}

TEST(StripLazy, RandomPathsAgreePointwise) {
  Environment env(GapDistribution{Pareto{1.5, 1.0}}, 14);
  const auto p = JumpDensity::validate({{-2, 0.1}, {-1, 0.2}, {0, 0.4}, {1, 0.2}, {2, 0.1}});
  for (std::uint64_t w = 0; w < 20; ++w) {
    RandomStream rng = make_stream(15, StreamRole::kWalker, w);
    const auto t = simulate(env, p, 400.0, rng);
    const auto s = strip_lazy(t);
    ASSERT_EQ(s.horizon(), t.horizon());
    for (int i = 0; i < 100; ++i) {
      const double at = rng.uniform() * t.horizon();
      ASSERT_NEAR(position_at(t, at), position_at(s, at), 1e-12);
    }
  }
}

TEST(GeometricGrid, HalvesDownFromTMax) {
  EXPECT_EQ(geometric_grid(8.0, 4), vec<double>({1.0, 2.0, 4.0, 8.0}));
  EXPECT_EQ(geometric_grid(10.0, 1), vec<double>({10.0}));
}

TEST(Batch, ResultsIndependentOfThreadCount) {
  BatchSpec spec{GapDistribution{Pareto{1.5, 1.0}}, JumpDensity::simple_symmetric()};
  spec.master_seed = 77;
  spec.walkers = 200;
  spec.times = {10.0, 100.0};
  for (auto mode : {Mode::kQuenched, Mode::kAnnealed}) {
    spec.mode = mode;
    spec.threads = 1;
    const auto serial = run_batch(spec);
    spec.threads = 4;
    const auto parallel = run_batch(spec);
    for (std::size_t w = 0; w < serial.size(); ++w)
      for (std::size_t i = 0; i < 2; ++i) {
        ASSERT_EQ(serial[w][i].x_value, parallel[w][i].x_value);
        ASSERT_EQ(serial[w][i].n_of_t, parallel[w][i].n_of_t);
      }
  }
}

TEST(Batch, QuenchedSharesOneEnvironmentAnnealedDoesNot) {
  // the first target reached is omega_{+1} or omega_{-1} of the walker's environment
  BatchSpec spec{GapDistribution{Exponential{1.0}}, JumpDensity::simple_symmetric()};
  spec.master_seed = 3;
  auto distinct_first_targets = [&](Mode m) {
    std::set<double> firsts;
    for (std::uint64_t w = 0; w < 400; ++w) {
      Environment env(spec.dist, m == Mode::kQuenched
                                     ? spec.quenched_seed()
                                     : derive_seed(spec.master_seed, StreamRole::kEnvironment, w));
      RandomStream rng = make_stream(spec.master_seed, StreamRole::kWalker, w);
      firsts.insert(simulate(env, spec.density, 1e-9, rng).targets_hit[1]);
    }
    return firsts.size();
  };
  EXPECT_EQ(distinct_first_targets(Mode::kQuenched), 2u);
  EXPECT_GT(distinct_first_targets(Mode::kAnnealed), 300u);
}

TEST(CollisionLln, ExponentialGapsShortRun) {
  // tau(n)/n -> m_j mu = 1 and t/n(t) -> 1, averaged over 20 (environment, walk) pairs
  const GapDistribution d{Exponential{1.0}};
  const auto p = JumpDensity::simple_symmetric();
  std::vector<double> a, b;
  for (std::uint64_t i = 0; i < 20; ++i) {
    Environment env(d, derive_seed(5, StreamRole::kEnvironment, i));
    RandomStream rng = make_stream(5, StreamRole::kWalker, i);
    const auto t = simulate(env, p, 2e5, rng);
    const std::uint64_t cp[] = {100'000};
    a.push_back(lln_series(t, cp).front().ratio);
    b.push_back(time_per_collision(t, 2e5));
  }
  EXPECT_NEAR(compensated_mean(a), 1.0, 0.02);
  EXPECT_NEAR(compensated_mean(b), 1.0, 0.02);
}
