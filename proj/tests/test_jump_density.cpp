#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gtest/gtest.h>

#include "levyrw/jump_density.hpp"
#include "levyrw/random.hpp"
#include "levyrw/summation.hpp"

using namespace levyrw;

namespace {

DensityViolation violation_of(const std::map<std::int64_t, double>& w) {
  try {
    JumpDensity::validate(w);
  } catch (const DensityError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "density unexpectedly valid";
  return DensityViolation::kNotNormalized;
}

double rel(double a, double b) { return std::fabs(a / b - 1.0); }

}  // namespace

TEST(Validate, SimpleSymmetricWalk) {
  const auto p = JumpDensity::validate({{-1, 0.5}, {1, 0.5}});
  EXPECT_DOUBLE_EQ(p.mean_abs_jump(), 1.0);
  EXPECT_DOUBLE_EQ(p.variance(), 1.0);
  EXPECT_TRUE(std::isinf(p.q_bar()));
}

TEST(Validate, LazyWalkMatchesDirectSummation) {
  const std::map<std::int64_t, double> w{{-1, 0.25}, {0, 0.5}, {1, 0.25}};
  const auto p = JumpDensity::validate(w);
  double mj = 0.0, v = 0.0;
  for (const auto& [k, x] : w) mj += std::abs(k) * x, v += double(k * k) * x;
  EXPECT_DOUBLE_EQ(p.mean_abs_jump(), mj);
  EXPECT_DOUBLE_EQ(p.mean_abs_jump(), 0.5);
  EXPECT_DOUBLE_EQ(p.variance(), v);
  EXPECT_DOUBLE_EQ(p.variance(), 0.5);
}

TEST(Validate, NamesTheViolatedHypothesis) {
  EXPECT_EQ(violation_of({{-1, 0.6}, {1, 0.4}}), DensityViolation::kNotSymmetric);
  EXPECT_EQ(violation_of({{0, 1.0}}), DensityViolation::kZeroVariance);
  EXPECT_EQ(violation_of({{-1, 0.5}, {1, 0.6}}), DensityViolation::kNotNormalized);
  EXPECT_EQ(violation_of({{-1, -0.5}, {0, 2.0}, {1, -0.5}}), DensityViolation::kNotNormalized);
  EXPECT_EQ(violation_of({{-2, 0.3}, {-1, 0.2}, {1, 0.2}, {2, 0.3}}),
            DensityViolation::kNotHalfMonotone);
  EXPECT_EQ(violation_of({{-2, 0.5}, {2, 0.5}}), DensityViolation::kNotHalfMonotone);
}

TEST(Validate, ErrorMessageCarriesHypothesisName) {
  try {
    JumpDensity::validate({{-1, 0.6}, {1, 0.4}});
    FAIL();
  } catch (const DensityError& e) {
    EXPECT_NE(std::string(e.what()).find("NotSymmetric"), std::string::npos);
  }
}

TEST(Validate, RenormalisesWithinTolerance) {
  const auto p = JumpDensity::validate({{-1, 0.5 + 1e-10}, {1, 0.5 + 1e-10}});
  EXPECT_NEAR(p.weight(1) + p.weight(-1), 1.0, 1e-15);
}

TEST(Validate, HalfDensityIsMirrored) {
  const auto p = JumpDensity::from_half({{0, 0.4}, {1, 0.2}, {2, 0.1}});
  EXPECT_DOUBLE_EQ(p.weight(-2), 0.1);
  EXPECT_DOUBLE_EQ(p.weight(2), 0.1);
  EXPECT_DOUBLE_EQ(p.weight(0), 0.4);
  EXPECT_THROW(JumpDensity::from_half({{-1, 0.5}}), ConfigError);
}

TEST(RemoveLazy, NoLazyMassIsIdentity) {
  const auto [p, eta] = remove_lazy(JumpDensity::simple_symmetric());
  EXPECT_DOUBLE_EQ(eta, 1.0);
  EXPECT_DOUBLE_EQ(p.weight(1), 0.5);
  EXPECT_DOUBLE_EQ(p.weight(0), 0.0);
}

TEST(RemoveLazy, LazySimpleWalkBecomesSimpleWalk) {
  const auto [p, eta] = remove_lazy(JumpDensity::lazy_simple_symmetric());
  EXPECT_DOUBLE_EQ(eta, 2.0);
  EXPECT_DOUBLE_EQ(p.weight(-1), 0.5);
  EXPECT_DOUBLE_EQ(p.weight(1), 0.5);
  EXPECT_DOUBLE_EQ(p.weight(0), 0.0);
}

TEST(RemoveLazy, RadiusTwoByHand) {
  const auto [p, eta] =
      remove_lazy(JumpDensity::validate({{-2, 0.1}, {-1, 0.2}, {0, 0.4}, {1, 0.2}, {2, 0.1}}));
  EXPECT_NEAR(eta, 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(p.weight(-2), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(p.weight(-1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(p.weight(1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(p.weight(2), 1.0 / 6.0, 1e-15);
  EXPECT_EQ(p.weight(0), 0.0);
}

TEST(RemoveLazy, ScalingIdentitiesHoldExactly) {
  // m_j' = eta m_j, v_p' = eta v_p, m_q' = eta^{q/2} m_q
  RandomStream rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int radius = 1 + static_cast<int>(rng.next_u64() % 5);
    std::vector<double> half(static_cast<std::size_t>(radius + 1));
    for (auto& x : half) x = rng.uniform_open();
    std::sort(half.begin() + 1, half.end(), std::greater<>());
    double total = half[0];
    for (int k = 1; k <= radius; ++k) total += 2 * half[static_cast<std::size_t>(k)];
    std::map<std::int64_t, double> w;
    for (int k = 0; k <= radius; ++k) {
      w[k] = half[static_cast<std::size_t>(k)] / total;
      w[-k] = w[k];
    }
    const auto p = JumpDensity::validate(w);
    const auto [thin, eta] = remove_lazy(p);
    ASSERT_LT(rel(thin.mean_abs_jump(), eta * p.mean_abs_jump()), 1e-12);
    ASSERT_LT(rel(thin.variance(), eta * p.variance()), 1e-12);
    for (double q : {0.5, 1.0, 2.0, 3.0, 4.0, 7.5})
      ASSERT_LT(rel(thin.moments().moment(q), std::pow(eta, q / 2) * p.moments().moment(q)), 1e-12);
  }
}

TEST(GaussianAbsMoment, ClosedFormValues) {
  EXPECT_EQ(gaussian_abs_moment(0.0, 3.7), 1.0);
  EXPECT_NEAR(gaussian_abs_moment(2.0, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(gaussian_abs_moment(2.0, 3.0), 3.0, 1e-13);
  EXPECT_NEAR(gaussian_abs_moment(4.0, 1.0), 3.0, 1e-13);
  EXPECT_NEAR(gaussian_abs_moment(1.0, 1.0), 0.7978845608028654, 1e-14);
}

TEST(GaussianAbsMoment, FirstMomentAgainstQuadratureAndMonteCarlo) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const double quad = 2.0 * integrator.integrate([](double x) {
    return x * std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  });
  EXPECT_NEAR(gaussian_abs_moment(1.0, 1.0), quad, 1e-12);

  RandomStream rng(5);
  std::vector<double> xs(10'000'000);
  for (auto& x : xs) x = std::fabs(rng.normal());
  const auto mc = mean_and_error(xs);
  EXPECT_NEAR(gaussian_abs_moment(1.0, 1.0), mc.mean, 3.0 * mc.standard_error);
}

TEST(GaussianAbsMoment, FractionalOrderAgainstQuadrature) {
  boost::math::quadrature::exp_sinh<double> integrator;
  for (double q : {0.5, 1.5, 3.0}) {
    for (double var : {0.5, 2.0}) {
      const double quad = 2.0 * integrator.integrate([&](double x) {
        if (x > 1e3) return 0.0;
        return std::pow(x, q) * std::exp(-0.5 * x * x / var) / std::sqrt(2.0 * std::numbers::pi * var);
      });
      EXPECT_NEAR(gaussian_abs_moment(q, var) / quad, 1.0, 1e-10) << q << " " << var;
    }
  }
}

TEST(GaussianAbsMoment, IncreasingInVariance) {
  for (double q : {0.5, 1.0, 2.0, 5.0})
    EXPECT_LT(gaussian_abs_moment(q, 1.0), gaussian_abs_moment(q, 1.01));
}

TEST(SampleJump, TwoPointLawBranches) {
  const auto p = JumpDensity::simple_symmetric();
  EXPECT_EQ(p.jump_from_uniform(0.0), -1);
  EXPECT_EQ(p.jump_from_uniform(0.49), -1);
  EXPECT_EQ(p.jump_from_uniform(0.5), 1);
  EXPECT_EQ(p.jump_from_uniform(0.999999), 1);
}

TEST(SampleJump, FrequenciesWithinMultinomialErrors) {
  const auto p = JumpDensity::lazy_simple_symmetric();
  RandomStream rng(8);
  constexpr int kDraws = 1'000'000;
  std::map<std::int64_t, int> counts;
  for (int i = 0; i < kDraws; ++i) ++counts[p.sample(rng)];
  for (std::int64_t k : {-1, 0, 1}) {
    const double w = p.weight(k);
    const double se = std::sqrt(w * (1 - w) / kDraws);
    EXPECT_NEAR(counts[k] / double(kDraws), w, 3 * se) << k;
  }
  EXPECT_EQ(counts.size(), 3u);
}

TEST(SampleJump, MeanAbsoluteJump) {
  const auto p = JumpDensity::validate({{-2, 0.1}, {-1, 0.2}, {0, 0.4}, {1, 0.2}, {2, 0.1}});
  RandomStream rng(9);
  std::vector<double> xs(1'000'000);
  for (auto& x : xs) x = std::fabs(static_cast<double>(p.sample(rng)));
  const auto mc = mean_and_error(xs);
  EXPECT_NEAR(mc.mean, p.mean_abs_jump(), 3 * mc.standard_error);
}

namespace {

std::vector<double> underlying_endpoints(const JumpDensity& p, int walks, int steps,
                                         std::uint64_t seed) {
  std::vector<double> out(static_cast<std::size_t>(walks));
  for (int w = 0; w < walks; ++w) {
    RandomStream rng = make_stream(seed, StreamRole::kWalker, static_cast<std::uint64_t>(w));
    std::int64_t s = 0;
    for (int i = 0; i < steps; ++i) s += p.sample(rng);
    out[static_cast<std::size_t>(w)] = static_cast<double>(s);
  }
  return out;
}

double ks_against_normal(std::vector<double> xs, double variance) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
    const double f = 0.5 * std::erfc(-xs[i] / std::sqrt(2 * variance));
    d = std::max({d, f - double(i) / n, double(j + 1) / n - f});
    i = j;
  }
  return d;
}

}  // namespace

TEST(UnderlyingWalk, CentralLimitTheorem) {
  const auto p = JumpDensity::validate({{-2, 0.1}, {-1, 0.2}, {0, 0.4}, {1, 0.2}, {2, 0.1}});
  constexpr int kSteps = 10'000;
  auto xs = underlying_endpoints(p, 10'000, kSteps, 31);
  for (auto& x : xs) x /= std::sqrt(double(kSteps));
  EXPECT_LT(ks_against_normal(xs, p.variance()), 0.02);
}

TEST(UnderlyingWalk, RescaledMomentsConverge) {
  const auto p = JumpDensity::lazy_simple_symmetric();
  constexpr int kSteps = 10'000;
  const auto xs = underlying_endpoints(p, 10'000, kSteps, 32);
  for (double q : {1.0, 2.0, 3.0, 4.0}) {
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      v[i] = std::pow(std::fabs(xs[i]), q) / std::pow(kSteps, q / 2);
    EXPECT_NEAR(compensated_mean(v) / p.moments().moment(q), 1.0, 0.05) << "q = " << q;
  }
}
