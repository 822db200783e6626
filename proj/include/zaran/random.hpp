#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace zaran {

/// Bumped whenever the draw sequence for a given (seed, stream) changes.
inline constexpr int kRngVersion = 1;

/// Seeded, stream-splittable random source.
///
/// Only the engine (mt19937_64, fully specified by the standard) is taken
/// from the library; integer and real draws are implemented here so the
/// sequence does not depend on the standard library vendor.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Independent source for a sub-stream (e.g. one per trial or worker).
  RandomSource derive(std::uint64_t sub_stream) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform random `count`-subset of [0, n) via partial Fisher-Yates,
  /// returned in ascending order.
  std::vector<std::size_t> sample_subset(std::size_t n, std::size_t count);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace zaran
