#ifndef LEVYRW_AVERAGING_HPP
#define LEVYRW_AVERAGING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "levyrw/error.hpp"
#include "levyrw/summation.hpp"

namespace levyrw {

/// Finite window of a density on the integers: weights[i] is p_{first + i},
/// zero outside.
struct DensityWindow {
  std::int64_t first = 0;
  std::vector<double> weights;

  std::int64_t last() const noexcept {
    return first + static_cast<std::int64_t>(weights.size()) - 1;
  }
  double at(std::int64_t j) const noexcept {
    if (j < first || j > last()) return 0.0;
    return weights[static_cast<std::size_t>(j - first)];
  }
  /// Mass of [-r, r].
  double central_mass(std::int64_t r) const {
    CompensatedSum s;
    for (std::int64_t j = -r; j <= r; ++j) s += at(j);
    return s.value();
  }
};

/// A sequence a_j with Cesaro limit a_bar, tested against an expanding family
/// of densities p^(n) that increase on the negatives and decrease on the
/// non-negatives.
struct AveragingProbe {
  std::string name;
  std::function<double(std::int64_t)> sequence;
  double cesaro_limit = 0.0;
  std::function<DensityWindow(std::uint64_t)> density;
};

struct AveragingPoint {
  std::uint64_t n = 0;
  double value = 0.0;      // E_n(a) = sum_j p^(n)_j a_j
  double abs_error = 0.0;  // |E_n(a) - a_bar|
};

/// Throws ConditionViolated unless w is a probability density that is
/// increasing on j < 0 and decreasing on j >= 0.
inline void check_expanding_density(const DensityWindow& w) {
  constexpr double kMassTolerance = 1e-9;
  constexpr double kSlack = 1e-12;
  // covers tail truncation of order 1e-17 per site
  constexpr double kAbsoluteSlack = 1e-15;
  CompensatedSum total;
  for (double x : w.weights) {
    if (!(x >= 0.0)) throw ConditionViolated("negative or NaN weight");
    total += x;
  }
  if (std::fabs(total.value() - 1.0) > kMassTolerance)
    throw ConditionViolated("weights sum to " + std::to_string(total.value()));
  const std::int64_t lo = std::min<std::int64_t>(w.first, -1);
  const std::int64_t hi = std::max<std::int64_t>(w.last(), 0);
  for (std::int64_t j = lo; j < -1; ++j) {
    if (w.at(j) > w.at(j + 1) * (1.0 + kSlack) + kAbsoluteSlack)
      throw ConditionViolated("density decreases at j = " + std::to_string(j) + " < 0");
  }
  for (std::int64_t j = 0; j < hi; ++j) {
    if (w.at(j + 1) > w.at(j) * (1.0 + kSlack) + kAbsoluteSlack)
      throw ConditionViolated("density increases at j = " + std::to_string(j) + " >= 0");
  }
}

/// E_n(a) for each n, with the distance to the Cesaro limit.
inline std::vector<AveragingPoint> averaging_check(const AveragingProbe& probe,
                                                   const std::vector<std::uint64_t>& n_list) {
  std::vector<AveragingPoint> out;
  for (auto n : n_list) {
    const DensityWindow w = probe.density(n);
    check_expanding_density(w);
    CompensatedSum e;
    for (std::size_t i = 0; i < w.weights.size(); ++i)
      e += w.weights[i] * probe.sequence(w.first + static_cast<std::int64_t>(i));
    out.push_back({n, e.value(), std::fabs(e.value() - probe.cesaro_limit)});
  }
  return out;
}

/// Binomial(n, 1/2) probabilities C(n, k) 2^{-n} for k in [k_first, ...],
/// grown outward from the mode by the ratio recurrence and cut where the
/// terms drop below 1e-17 (discarded tail mass far below 1e-12), then
/// renormalised.
struct BinomialWindow {
  std::int64_t k_first = 0;
  std::vector<double> pmf;
};

inline BinomialWindow binomial_half_window(std::uint64_t n) {
  constexpr double kCut = 1e-17;
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t mode = nn / 2;
  const double log_mode = std::lgamma(static_cast<double>(nn) + 1.0) -
                          std::lgamma(static_cast<double>(mode) + 1.0) -
                          std::lgamma(static_cast<double>(nn - mode) + 1.0) -
                          static_cast<double>(nn) * std::log(2.0);
  std::vector<double> up{std::exp(log_mode)};  // k = mode, mode+1, ...
  for (std::int64_t k = mode; k < nn; ++k) {
    const double next = up.back() * static_cast<double>(nn - k) / static_cast<double>(k + 1);
    if (next < kCut) break;
    up.push_back(next);
  }
  std::vector<double> down;  // k = mode-1, mode-2, ...
  double cur = up.front();
  for (std::int64_t k = mode; k > 0; --k) {
    cur = cur * static_cast<double>(k) / static_cast<double>(nn - k + 1);
    if (cur < kCut) break;
    down.push_back(cur);
  }
  BinomialWindow b;
  b.k_first = mode - static_cast<std::int64_t>(down.size());
  b.pmf.assign(down.rbegin(), down.rend());
  b.pmf.insert(b.pmf.end(), up.begin(), up.end());
  const double total = compensated_total(b.pmf);
  for (double& x : b.pmf) x /= total;
  return b;
}

/// Law of S_n for the simple symmetric walk: mass C(n, k) 2^{-n} at 2k - n.
/// Every other site carries zero mass, so this is NOT monotone away from 0.
inline DensityWindow srw_step_density(std::uint64_t n) {
  const auto b = binomial_half_window(n);
  const auto nn = static_cast<std::int64_t>(n);
  DensityWindow w;
  w.first = 2 * b.k_first - nn;
  w.weights.assign(2 * b.pmf.size() - 1, 0.0);
  for (std::size_t i = 0; i < b.pmf.size(); ++i) w.weights[2 * i] = b.pmf[i];
  return w;
}

/// (P(S_n = j) + P(S_{n+1} = j)) / 2 for the simple symmetric walk: the SRW
/// law with the parity smoothed out. Symmetric and monotone away from 0.
inline DensityWindow srw_smoothed_density(std::uint64_t n) {
  const DensityWindow a = srw_step_density(n);
  const DensityWindow b = srw_step_density(n + 1);
  DensityWindow w;
  w.first = std::min(a.first, b.first);
  const std::int64_t last = std::max(a.last(), b.last());
  w.weights.resize(static_cast<std::size_t>(last - w.first + 1));
  for (std::int64_t j = w.first; j <= last; ++j)
    w.weights[static_cast<std::size_t>(j - w.first)] = 0.5 * (a.at(j) + b.at(j));
  return w;
}

namespace probes {

inline AveragingProbe constant(double c) {
  return {"constant", [c](std::int64_t) { return c; }, c, srw_smoothed_density};
}

/// a_j = (-1)^j, Cesaro limit 0.
inline AveragingProbe alternating() {
  return {"alternating", [](std::int64_t j) { return (j % 2 == 0) ? 1.0 : -1.0; }, 0.0,
          srw_smoothed_density};
}

/// a_j = a_bar + 1 / (1 + |j|).
inline AveragingProbe decaying(double a_bar) {
  return {"decaying",
          [a_bar](std::int64_t j) {
            return a_bar + 1.0 / (1.0 + static_cast<double>(j < 0 ? -j : j));
          },
          a_bar, srw_smoothed_density};
}

}  // namespace probes

}  // namespace levyrw

#endif  // LEVYRW_AVERAGING_HPP
