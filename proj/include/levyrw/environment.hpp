#ifndef LEVYRW_ENVIRONMENT_HPP
#define LEVYRW_ENVIRONMENT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "levyrw/error.hpp"
#include "levyrw/random.hpp"

namespace levyrw {

// ---------------------------------------------------------------------------
// Gap distributions
// ---------------------------------------------------------------------------

/// Pareto law with density alpha xmin^alpha x^{-alpha-1} on [xmin, inf).
/// For 1 < alpha < 2 the mean is finite and the variance infinite.
struct Pareto {
  double alpha;
  double xmin;
};

struct Exponential {
  double rate;
};

struct Constant {
  double value;
};

struct UniformInterval {
  double lo;
  double hi;
};

/// Law of the i.i.d. positive gaps between neighbouring targets. Build through
/// make_gap_distribution so the parameters are validated.
class GapDistribution {
 public:
  using Variant = std::variant<Pareto, Exponential, Constant, UniformInterval>;

  template <class Family>
  explicit GapDistribution(Family family) : family_(family) {
    validate();
  }

  const Variant& family() const noexcept { return family_; }

  std::string name() const {
    return std::visit(
        [](const auto& f) -> std::string {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, Pareto>) return "pareto";
          if constexpr (std::is_same_v<F, Exponential>) return "exponential";
          if constexpr (std::is_same_v<F, Constant>) return "constant";
          if constexpr (std::is_same_v<F, UniformInterval>) return "uniform";
        },
        family_);
  }

  /// Pareto with alpha in (1, 2): finite mean, infinite variance.
  bool has_infinite_variance() const noexcept {
    const auto* p = std::get_if<Pareto>(&family_);
    return p != nullptr && p->alpha <= 2.0;
  }

 private:
  void validate() const {
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    std::visit(
        [&](const auto& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, Pareto>) {
            if (!(std::isfinite(f.alpha) && f.alpha > 1.0) || !positive(f.xmin))
              throw ConfigError("pareto gaps need alpha > 1 and xmin > 0");
          } else if constexpr (std::is_same_v<F, Exponential>) {
            if (!positive(f.rate)) throw ConfigError("exponential gaps need rate > 0");
          } else if constexpr (std::is_same_v<F, Constant>) {
            if (!positive(f.value)) throw ConfigError("constant gaps need value > 0");
          } else {
            if (!positive(f.lo) || !std::isfinite(f.hi) || f.hi < f.lo)
              throw ConfigError("uniform gaps need 0 < lo <= hi");
          }
        },
        family_);
  }

  Variant family_;
};

/// Closed-form mean of the gap law.
inline double gap_mean(const GapDistribution& dist) noexcept {
  return std::visit(
      [](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Pareto>) return f.alpha * f.xmin / (f.alpha - 1.0);
        if constexpr (std::is_same_v<F, Exponential>) return 1.0 / f.rate;
        if constexpr (std::is_same_v<F, Constant>) return f.value;
        if constexpr (std::is_same_v<F, UniformInterval>) return 0.5 * (f.lo + f.hi);
      },
      dist.family());
}

/// Inverse CDF: the x with P(gap <= x) = p, for p in [0, 1).
inline double gap_quantile(const GapDistribution& dist, double p) {
  return std::visit(
      [p](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Pareto>) return f.xmin * std::pow(1.0 - p, -1.0 / f.alpha);
        if constexpr (std::is_same_v<F, Exponential>) return -std::log1p(-p) / f.rate;
        if constexpr (std::is_same_v<F, Constant>) return f.value;
        if constexpr (std::is_same_v<F, UniformInterval>) return f.lo + (f.hi - f.lo) * p;
      },
      dist.family());
}

/// Inverse survival function: maps u in (0, 1) to the x with P(gap > x) = u.
/// Pareto: xmin u^{-1/alpha}; exponential: -ln(u) / rate.
inline double gap_from_uniform(const GapDistribution& dist, double u) {
  return std::visit(
      [u](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Pareto>) return f.xmin * std::pow(u, -1.0 / f.alpha);
        if constexpr (std::is_same_v<F, Exponential>) return -std::log(u) / f.rate;
        if constexpr (std::is_same_v<F, Constant>) return f.value;
        if constexpr (std::is_same_v<F, UniformInterval>) return f.hi - (f.hi - f.lo) * u;
      },
      dist.family());
}

inline double sample_gap(const GapDistribution& dist, RandomStream& rng) {
  return gap_from_uniform(dist, rng.uniform_open());
}

// ---------------------------------------------------------------------------
// Environment
// ---------------------------------------------------------------------------

/// Two-sided array of targets omega_k with omega_0 = 0 and
/// omega_k - omega_{k-1} = zeta_k i.i.d. Grows lazily on demand.
///
/// Right gaps zeta_1, zeta_2, ... and left gaps zeta_0, zeta_{-1}, ... come
/// from two independent streams derived from the seed, so target(k) is a pure
/// function of (seed, dist, k) whatever order indices are queried in.
///
/// A frozen environment never grows again; target() is then a read of
/// already materialised data and may be called concurrently.
class Environment {
 public:
  static constexpr std::int64_t kDefaultIndexCap = 100'000'000;

  Environment(GapDistribution dist, std::uint64_t seed,
              std::int64_t index_cap = kDefaultIndexCap)
      : dist_(std::move(dist)),
        seed_(seed),
        index_cap_(index_cap),
        right_stream_(derive_seed(seed, StreamRole::kRightGaps)),
        left_stream_(derive_seed(seed, StreamRole::kLeftGaps)) {}

  /// Environment whose first gaps are prescribed: right_gaps are
  /// zeta_1, zeta_2, ..., left_gaps are zeta_0, zeta_{-1}, ... . Further gaps
  /// are drawn from the distribution.
  Environment(GapDistribution dist, std::uint64_t seed, const std::vector<double>& right_gaps,
              const std::vector<double>& left_gaps = {},
              std::int64_t index_cap = kDefaultIndexCap)
      : Environment(std::move(dist), seed, index_cap) {
    for (double g : right_gaps) push_right(g);
    for (double g : left_gaps) push_left(g);
  }

  const GapDistribution& distribution() const noexcept { return dist_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::int64_t index_cap() const noexcept { return index_cap_; }
  bool frozen() const noexcept { return frozen_; }
  void freeze() noexcept { frozen_ = true; }

  /// Largest materialised index on the right (0 if none) and smallest on the
  /// left (0 if none).
  std::int64_t max_index() const noexcept { return static_cast<std::int64_t>(right_.size()); }
  std::int64_t min_index() const noexcept { return -static_cast<std::int64_t>(left_.size()); }

  /// omega_k. Extends the environment if k is not yet materialised.
  double target(std::int64_t k) {
    if (k > 0) {
      const auto i = static_cast<std::size_t>(k - 1);
      if (i >= right_.size()) extend_to(0, k);
      return right_[i];
    }
    if (k < 0) {
      const auto i = static_cast<std::size_t>(-k - 1);
      if (i >= left_.size()) extend_to(k, 0);
      return left_[i];
    }
    return 0.0;
  }

  /// omega_k for materialised k only; never mutates.
  double at(std::int64_t k) const {
    if (k > max_index() || k < min_index())
      throw EnvironmentCapExceeded("target " + std::to_string(k) + " is not materialised");
    if (k > 0) return right_[static_cast<std::size_t>(k - 1)];
    if (k < 0) return left_[static_cast<std::size_t>(-k - 1)];
    return 0.0;
  }

  /// zeta_k = omega_k - omega_{k-1}.
  double gap(std::int64_t k) { return target(k) - target(k - 1); }

  /// Materialises every index in [k_lo, k_hi].
  void extend_to(std::int64_t k_lo, std::int64_t k_hi) {
    if (k_hi > index_cap_ || -k_lo > index_cap_)
      throw EnvironmentCapExceeded("target index beyond cap " + std::to_string(index_cap_) +
                                   " (runaway walk or misconfigured gaps)");
    const bool grows = k_hi > max_index() || k_lo < min_index();
    if (grows && frozen_)
      throw EnvironmentCapExceeded("frozen environment cannot grow to [" + std::to_string(k_lo) +
                                   ", " + std::to_string(k_hi) + "]");
    while (max_index() < k_hi) push_right(sample_gap(dist_, right_stream_));
    while (min_index() > k_lo) push_left(sample_gap(dist_, left_stream_));
  }

  /// Grows both sides until the outermost targets lie beyond +-distance, then
  /// adds index_margin further targets per side. A walk whose jumps never
  /// exceed index_margin and that stops once it has travelled farther than
  /// distance only ever reads materialised targets.
  void extend_to_cover(double distance, std::int64_t index_margin) {
    std::int64_t hi = max_index();
    while (hi == 0 || target(hi) <= distance) extend_to(0, ++hi);
    std::int64_t lo = min_index();
    while (lo == 0 || target(lo) >= -distance) extend_to(--lo, 0);
    extend_to(lo - index_margin, hi + index_margin);
  }

 private:
  void push_right(double g) {
    const double last = right_.empty() ? 0.0 : right_.back();
    right_.push_back(last + g);
  }
  void push_left(double g) {
    const double last = left_.empty() ? 0.0 : left_.back();
    left_.push_back(last - g);
  }

  GapDistribution dist_;
  std::uint64_t seed_;
  std::int64_t index_cap_;
  RandomStream right_stream_;
  RandomStream left_stream_;
  std::vector<double> right_;  // omega_1, omega_2, ...
  std::vector<double> left_;   // omega_{-1}, omega_{-2}, ...
  bool frozen_ = false;
};

}  // namespace levyrw

#endif  // LEVYRW_ENVIRONMENT_HPP
