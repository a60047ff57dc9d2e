#include "epistle/rng.hpp"

#include <stdexcept>

namespace epistle {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(mix64(mix64(mix64(seed) ^ stream) ^ index));
}

std::size_t Rng::below(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
  const std::uint64_t b = bound;
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = max() - (max() % b + 1) % b;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return static_cast<std::size_t>(x % b);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace epistle
