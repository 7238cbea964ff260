#include "permcode/gf.hpp"

namespace permcode {

namespace {
// Primitive polynomials over GF(2), index = degree.
constexpr std::uint32_t kPrimitive[13] = {
    0,     0x3,   0x7,   0xB,   0x13,  0x25,  0x43,
    0x89,  0x11D, 0x211, 0x409, 0x805, 0x1053};
}  // namespace

GF2m::GF2m(int bits) : bits_(bits) {
  if (bits < 1 || bits > 12)
    throw param_error("field width must be between 1 and 12 bits");
  q_ = 1u << bits;
  const std::uint32_t poly = kPrimitive[bits];
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur <<= 1;
    if (cur & q_) cur ^= poly;
  }
}

std::uint32_t GF2m::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t GF2m::inv(std::uint32_t a) const {
  if (a == 0) throw malformed_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GF2m::div(std::uint32_t a, std::uint32_t b) const {
  return mul(a, inv(b));
}

}  // namespace permcode
