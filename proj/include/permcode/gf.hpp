#pragma once

#include <cstdint>
#include <vector>

#include "permcode/errors.hpp"

namespace permcode {

// GF(2^b) arithmetic via log/antilog tables, 1 <= b <= 12.
class GF2m {
 public:
  explicit GF2m(int bits);

  int bits() const { return bits_; }
  std::uint32_t size() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;

 private:
  int bits_;
  std::uint32_t q_;
  std::vector<std::uint32_t> log_, exp_;
};

}  // namespace permcode
