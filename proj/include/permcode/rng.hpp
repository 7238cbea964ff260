#pragma once

#include <cstdint>
#include <random>

#include "permcode/perm.hpp"

namespace permcode {

// splitmix64 step; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(mix64(mix64(seed) ^ stream));
}

// Unbiased draw from [0, bound); rejection sampling so results do not depend
// on library-specific distribution internals.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline Word random_permutation(std::mt19937_64& rng, int n) {
  Word w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(uniform_below(rng, i + 1));
    std::swap(w[i], w[j]);
  }
  return w;
}

}  // namespace permcode
