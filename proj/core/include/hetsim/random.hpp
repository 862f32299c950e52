#pragma once

#include <cstdint>
#include <random>

namespace hetsim {

std::uint64_t splitmix64(std::uint64_t x);

/// Seeded random stream with platform-independent draws.
///
/// std::uniform_*_distribution output is implementation defined, so the
/// conversions from raw engine output are done here to keep traces
/// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)), key_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Independent substream keyed by (stream, a, b). Does not advance this stream.
  Rng derive(std::uint64_t stream, std::uint64_t a = 0, std::uint64_t b = 0) const;

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t key_;
};

}  // namespace hetsim
