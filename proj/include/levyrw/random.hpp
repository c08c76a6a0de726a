#ifndef LEVYRW_RANDOM_HPP
#define LEVYRW_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace levyrw {

/// Roles of the substreams derived from a master seed. The numeric values are
/// part of the reproducibility contract; do not renumber.
enum class StreamRole : std::uint64_t {
  kEnvironment = 1,
  kRightGaps = 2,
  kLeftGaps = 3,
  kWalker = 4,
  kChain = 5,
};

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the substream (master, role, index). Distinct triples give
/// statistically independent streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, StreamRole role,
                                    std::uint64_t index = 0) noexcept {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ static_cast<std::uint64_t>(role));
  return mix64(h ^ index);
}

/// A single reproducible random stream.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1); 53-bit resolution.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal by Box-Muller, so draws do not depend on the standard library.
  double normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    return r * std::cos(2.0 * std::numbers::pi * uniform());
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline RandomStream make_stream(std::uint64_t master, StreamRole role,
                                std::uint64_t index = 0) {
  return RandomStream(derive_seed(master, role, index));
}

}  // namespace levyrw

#endif  // LEVYRW_RANDOM_HPP
