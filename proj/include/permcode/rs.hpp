#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permcode/gf.hpp"

namespace permcode {

struct RSConfig {
  int field_bits = 0;
  int k = 0;  // message symbols
  int t = 0;  // redundancy symbols
};

// Systematic evaluation-style Reed-Solomon over GF(2^b), erasure recovery
// only. Codeword symbol i is P(i) for the unique polynomial P of degree < k
// with P(i) = message[i] for i < k; redundancy is P(k) .. P(k+t-1).
class ReedSolomonErasure {
 public:
  explicit ReedSolomonErasure(const RSConfig& cfg);

  const RSConfig& config() const { return cfg_; }
  const GF2m& field() const { return gf_; }

  std::vector<std::uint32_t> redundancy(
      const std::vector<std::uint32_t>& message) const;

  // codeword = k message symbols then t redundancy symbols, nullopt where
  // erased. Recovers the message; throws decode_error when more than t
  // symbols are erased or the known symbols are inconsistent.
  std::vector<std::uint32_t> recover(
      const std::vector<std::optional<std::uint32_t>>& codeword) const;

 private:
  // P(x) through the given support, evaluated at x.
  std::uint32_t interpolate_at(const std::vector<std::uint32_t>& xs,
                               const std::vector<std::uint32_t>& ys,
                               std::uint32_t x) const;

  RSConfig cfg_;
  GF2m gf_;
};

// MSB-first fixed-width bit packing: bit j of group g is weighted
// 2^(b-1-j); a short tail group is zero-padded on the low side.
std::vector<std::uint32_t> pack_bits_msb(const std::vector<std::uint8_t>& bits,
                                         int b);
std::vector<std::uint8_t> unpack_bits_msb(
    const std::vector<std::uint32_t>& symbols, int b);

}  // namespace permcode
