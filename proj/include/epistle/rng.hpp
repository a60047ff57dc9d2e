#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace epistle {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seedable generator whose output is identical on every platform:
/// std::mt19937_64 (bit-exact by the standard) plus our own bounded-integer
/// and Bernoulli draws, since the std distributions are implementation
/// defined.
///
/// Substreams: the engine for (seed, stream, index) is seeded with
/// mix64(mix64(mix64(seed) ^ stream) ^ index).
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound). bound must be positive.
  std::size_t below(std::size_t bound);
  /// Uniform on [0, 1) with 53 bits of precision.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace epistle
