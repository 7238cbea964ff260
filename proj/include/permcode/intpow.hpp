#pragma once

#include <cstdint>

#include "permcode/errors.hpp"

namespace permcode::detail {

using u128 = unsigned __int128;

inline u128 checked_mul(u128 a, std::uint64_t b) {
  if (b != 0 && a > static_cast<u128>(-1) / b)
    throw param_error("integer overflow in capacity computation");
  return a * b;
}

inline u128 checked_pow(std::uint64_t base, int exp) {
  u128 acc = 1;
  for (int i = 0; i < exp; ++i) acc = checked_mul(acc, base);
  return acc;
}

// Smallest x >= lo with base^x >= target.
inline int min_power_at_least(std::uint64_t base, u128 target, int lo = 1) {
  if (base < 2) throw param_error("power base must be at least 2");
  u128 acc = checked_pow(base, lo);
  int x = lo;
  while (acc < target) {
    acc = checked_mul(acc, base);
    ++x;
  }
  return x;
}

}  // namespace permcode::detail
