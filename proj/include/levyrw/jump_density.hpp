#ifndef LEVYRW_JUMP_DENSITY_HPP
#define LEVYRW_JUMP_DENSITY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "levyrw/error.hpp"
#include "levyrw/random.hpp"

namespace levyrw {

enum class DensityViolation { kNotNormalized, kNotSymmetric, kNotHalfMonotone, kZeroVariance };

inline const char* to_string(DensityViolation v) noexcept {
  switch (v) {
    case DensityViolation::kNotNormalized: return "NotNormalized";
    case DensityViolation::kNotSymmetric: return "NotSymmetric";
    case DensityViolation::kNotHalfMonotone: return "NotHalfMonotone";
    case DensityViolation::kZeroVariance: return "ZeroVariance";
  }
  return "?";
}

class DensityError : public Error {
 public:
  DensityError(DensityViolation kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  DensityViolation kind() const noexcept { return kind_; }

 private:
  DensityViolation kind_;
};

/// E|Z|^q for Z ~ N(0, variance):  variance^{q/2} 2^{q/2} Gamma((q+1)/2) / sqrt(pi).
inline double gaussian_abs_moment(double q, double variance) {
  if (q == 0.0) return 1.0;
  const double log_m = 0.5 * q * std::log(2.0 * variance) + std::lgamma(0.5 * (q + 1.0)) -
                       0.5 * std::log(std::numbers::pi);
  return std::exp(log_m);
}

/// Absolute moments m_q of the centred Gaussian a walk rescales to.
struct GaussianMoments {
  double variance;
  double moment(double q) const { return gaussian_abs_moment(q, variance); }
};

/// Symmetric, half-monotone jump law (p_k) of finite support.
///
/// Half-monotonicity is required from k = 1 outwards. The weight p_0 only
/// adds self-jumps, which the continuous-time walk never sees, so it is left
/// unconstrained.
class JumpDensity {
 public:
  static constexpr double kNormalizationTolerance = 1e-9;

  /// Checks the standing hypotheses and renormalises.
  static JumpDensity validate(const std::map<std::int64_t, double>& weights) {
    if (weights.empty()) throw DensityError(DensityViolation::kNotNormalized, "empty weight map");
    std::int64_t radius = 0;
    double total = 0.0;
    for (const auto& [k, w] : weights) {
      if (!std::isfinite(w) || w < 0.0)
        throw DensityError(DensityViolation::kNotNormalized,
                           "weight of " + std::to_string(k) + " is not a probability");
      radius = std::max(radius, k < 0 ? -k : k);
      total += w;
    }
    if (std::fabs(total - 1.0) > kNormalizationTolerance)
      throw DensityError(DensityViolation::kNotNormalized,
                         "weights sum to " + std::to_string(total));

    std::vector<double> w(static_cast<std::size_t>(2 * radius + 1), 0.0);
    for (const auto& [k, x] : weights) w[static_cast<std::size_t>(k + radius)] = x / total;
    return JumpDensity(radius, std::move(w));
  }

  /// Builds the symmetric density from weights of k >= 0; p_{-k} := p_k.
  static JumpDensity from_half(const std::vector<std::pair<std::int64_t, double>>& half) {
    std::map<std::int64_t, double> full;
    for (const auto& [k, w] : half) {
      if (k < 0) throw ConfigError("half-density keys must be >= 0, got " + std::to_string(k));
      if (full.count(k) != 0) throw ConfigError("duplicate jump " + std::to_string(k));
      full[k] = w;
      if (k != 0) full[-k] = w;
    }
    return validate(full);
  }

  static JumpDensity simple_symmetric() { return validate({{-1, 0.5}, {1, 0.5}}); }
  static JumpDensity lazy_simple_symmetric() {
    return validate({{-1, 0.25}, {0, 0.5}, {1, 0.25}});
  }

  std::int64_t radius() const noexcept { return radius_; }
  double weight(std::int64_t k) const noexcept {
    if (k < -radius_ || k > radius_) return 0.0;
    return weights_[static_cast<std::size_t>(k + radius_)];
  }
  /// Weights of -radius .. radius.
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Mean absolute jump  2 sum_{k>=1} k p_k.
  double mean_abs_jump() const noexcept { return mean_abs_jump_; }
  /// v_p = sum k^2 p_k = m_2.
  double variance() const noexcept { return variance_; }
  /// Supremal finite moment order; infinite for finite support.
  double q_bar() const noexcept { return std::numeric_limits<double>::infinity(); }
  double lazy_mass() const noexcept { return weight(0); }
  GaussianMoments moments() const noexcept { return {variance_}; }

  /// Jump for a uniform u in [0, 1): the first k in -radius.. with CDF(k) > u.
  std::int64_t jump_from_uniform(double u) const noexcept {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const auto i = std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                            static_cast<std::ptrdiff_t>(cdf_.size()) - 1);
    return static_cast<std::int64_t>(i) - radius_;
  }

  std::int64_t sample(RandomStream& rng) const { return jump_from_uniform(rng.uniform()); }

 private:
  JumpDensity(std::int64_t radius, std::vector<double> weights)
      : radius_(radius), weights_(std::move(weights)) {
    constexpr double kSlack = 1e-12;
    for (std::int64_t k = 1; k <= radius_; ++k) {
      const double a = weight(k), b = weight(-k);
      if (std::fabs(a - b) > kSlack * std::max(a, b))
        throw DensityError(DensityViolation::kNotSymmetric,
                           "p_" + std::to_string(k) + " != p_-" + std::to_string(k));
    }
    for (std::int64_t k = 1; k < radius_; ++k) {
      if (weight(k + 1) > weight(k) * (1.0 + kSlack))
        throw DensityError(DensityViolation::kNotHalfMonotone,
                           "p_" + std::to_string(k + 1) + " > p_" + std::to_string(k));
    }
    double mj = 0.0, v = 0.0;
    for (std::int64_t k = 1; k <= radius_; ++k) {
      const auto kd = static_cast<double>(k);
      mj += kd * (weight(k) + weight(-k));
      v += kd * kd * (weight(k) + weight(-k));
    }
    if (!(v > 0.0)) throw DensityError(DensityViolation::kZeroVariance, "all mass sits on 0");
    mean_abs_jump_ = mj;
    variance_ = v;

    cdf_.resize(weights_.size());
    double c = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      c += weights_[i];
      cdf_[i] = c;
    }
    cdf_.back() = 1.0;
  }

  std::int64_t radius_;
  std::vector<double> weights_;
  std::vector<double> cdf_;
  double mean_abs_jump_ = 0.0;
  double variance_ = 0.0;
};

struct LazyRemoval {
  JumpDensity density;
  double eta;  // (sum_{k != 0} p_k)^{-1}
};

/// Drops the self-jump mass: p'_0 = 0, p'_j = p_j / sum_{k != 0} p_k.
inline LazyRemoval remove_lazy(const JumpDensity& p) {
  double moving = 0.0;
  for (std::int64_t k = 1; k <= p.radius(); ++k) moving += p.weight(k) + p.weight(-k);
  std::map<std::int64_t, double> w;
  for (std::int64_t k = -p.radius(); k <= p.radius(); ++k) {
    if (k != 0 && p.weight(k) > 0.0) w[k] = p.weight(k) / moving;
  }
  return {JumpDensity::validate(w), 1.0 / moving};
}

}  // namespace levyrw

#endif  // LEVYRW_JUMP_DENSITY_HPP
