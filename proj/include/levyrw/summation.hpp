#ifndef LEVYRW_SUMMATION_HPP
#define LEVYRW_SUMMATION_HPP

#include <cmath>
#include <cstddef>
#include <span>

namespace levyrw {

/// Neumaier's improved Kahan summation. The result is within a couple of ulps
/// of the exactly rounded sum, so it does not depend on summation order in
/// any practical sense.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) noexcept {
  CompensatedSum s;
  for (double x : xs) s += x;
  return s.value();
}

inline double compensated_mean(std::span<const double> xs) noexcept {
  return xs.empty() ? 0.0 : compensated_total(xs) / static_cast<double>(xs.size());
}

struct MeanAndError {
  double mean = 0.0;
  double standard_error = 0.0;
  double variance = 0.0;  // unbiased sample variance
  std::size_t count = 0;
};

/// Two-pass mean and standard error of the mean. For the sample mean the
/// jackknife standard error coincides with s / sqrt(N).
inline MeanAndError mean_and_error(std::span<const double> xs) noexcept {
  MeanAndError r;
  r.count = xs.size();
  if (xs.empty()) return r;
  r.mean = compensated_mean(xs);
  if (xs.size() < 2) return r;
  CompensatedSum ss;
  for (double x : xs) {
    const double d = x - r.mean;
    ss += d * d;
  }
  const auto n = static_cast<double>(xs.size());
  r.variance = ss.value() / (n - 1.0);
  r.standard_error = std::sqrt(r.variance / n);
  return r;
}

}  // namespace levyrw

#endif  // LEVYRW_SUMMATION_HPP
