#pragma once

#include <cstdint>
#include <random>

namespace origami {

// splitmix64; used only to spread (seed, index) pairs into engine seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic per-sample stream. Sample index i always sees the same
// stream for a fixed seed, independent of how samples are split over workers.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 eng(mix64(mix64(seed) ^ mix64(index + 0x51ed2701)));
  eng.discard(3);
  return eng;
}

// Unbiased draw from [0, m) by rejection; avoids the modulo bias and the
// implementation-defined behaviour of std::uniform_int_distribution.
inline std::uint64_t bounded_uniform(std::mt19937_64& eng, std::uint64_t m) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m + 1) % m;
  for (;;) {
    std::uint64_t x = eng();
    if (x <= limit) return x % m;
  }
}

}  // namespace origami
