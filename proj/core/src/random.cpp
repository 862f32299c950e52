#include "hetsim/random.hpp"

namespace hetsim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

Rng Rng::derive(std::uint64_t stream, std::uint64_t a, std::uint64_t b) const {
  std::uint64_t k = splitmix64(key_ ^ 0x5851f42d4c957f2dULL);
  k = splitmix64(k ^ stream);
  k = splitmix64(k ^ a);
  k = splitmix64(k ^ b);
  return Rng(k);
}

}  // namespace hetsim
