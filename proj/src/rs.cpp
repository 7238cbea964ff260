#include "permcode/rs.hpp"

#include <string>

namespace permcode {

ReedSolomonErasure::ReedSolomonErasure(const RSConfig& cfg)
    : cfg_(cfg), gf_(cfg.field_bits) {
  if (cfg_.k < 1 || cfg_.t < 1)
    throw param_error("need at least one message and one redundancy symbol");
  if (static_cast<std::uint32_t>(cfg_.k + cfg_.t + 1) > gf_.size())
    throw param_error("field too small: need 2^b >= k + t + 1");
}

std::uint32_t ReedSolomonErasure::interpolate_at(
    const std::vector<std::uint32_t>& xs, const std::vector<std::uint32_t>& ys,
    std::uint32_t x) const {
  // Lagrange form; subtraction and addition coincide in characteristic 2.
  std::uint32_t acc = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    std::uint32_t term = ys[j];
    for (std::size_t l = 0; l < xs.size(); ++l) {
      if (l == j) continue;
      term = gf_.mul(term, gf_.div(gf_.add(x, xs[l]), gf_.add(xs[j], xs[l])));
    }
    acc = gf_.add(acc, term);
  }
  return acc;
}

std::vector<std::uint32_t> ReedSolomonErasure::redundancy(
    const std::vector<std::uint32_t>& message) const {
  if (static_cast<int>(message.size()) != cfg_.k)
    throw malformed_error("message length does not match k");
  std::vector<std::uint32_t> xs(cfg_.k), ys = message;
  for (int i = 0; i < cfg_.k; ++i) xs[i] = static_cast<std::uint32_t>(i);
  for (std::uint32_t y : ys)
    if (y >= gf_.size()) throw malformed_error("symbol outside field");
  std::vector<std::uint32_t> red(cfg_.t);
  for (int i = 0; i < cfg_.t; ++i)
    red[i] = interpolate_at(xs, ys, static_cast<std::uint32_t>(cfg_.k + i));
  return red;
}

std::vector<std::uint32_t> ReedSolomonErasure::recover(
    const std::vector<std::optional<std::uint32_t>>& codeword) const {
  const int len = cfg_.k + cfg_.t;
  if (static_cast<int>(codeword.size()) != len)
    throw malformed_error("codeword length does not match k + t");
  std::vector<std::uint32_t> xs, ys;
  int erased = 0;
  for (int i = 0; i < len; ++i) {
    if (!codeword[i]) {
      ++erased;
      continue;
    }
    if (*codeword[i] >= gf_.size())
      throw malformed_error("symbol outside field");
    xs.push_back(static_cast<std::uint32_t>(i));
    ys.push_back(*codeword[i]);
  }
  if (erased > cfg_.t)
    throw decode_error("erasures exceed redundancy: " +
                       std::to_string(erased) + " > " +
                       std::to_string(cfg_.t));
  const std::vector<std::uint32_t> sup_x(xs.begin(), xs.begin() + cfg_.k);
  const std::vector<std::uint32_t> sup_y(ys.begin(), ys.begin() + cfg_.k);
  for (std::size_t i = cfg_.k; i < xs.size(); ++i)
    if (interpolate_at(sup_x, sup_y, xs[i]) != ys[i])
      throw decode_error("known symbols are not consistent with one codeword");
  std::vector<std::uint32_t> message(cfg_.k);
  for (int i = 0; i < cfg_.k; ++i)
    message[i] = codeword[i] ? *codeword[i]
                             : interpolate_at(sup_x, sup_y,
                                              static_cast<std::uint32_t>(i));
  return message;
}

std::vector<std::uint32_t> pack_bits_msb(const std::vector<std::uint8_t>& bits,
                                         int b) {
  if (b < 1) throw param_error("symbol width must be positive");
  std::vector<std::uint32_t> symbols((bits.size() + b - 1) / b, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw malformed_error("bit value out of range");
    const std::size_t g = i / b, j = i % b;
    symbols[g] |= static_cast<std::uint32_t>(bits[i]) << (b - 1 - j);
  }
  return symbols;
}

std::vector<std::uint8_t> unpack_bits_msb(
    const std::vector<std::uint32_t>& symbols, int b) {
  if (b < 1) throw param_error("symbol width must be positive");
  std::vector<std::uint8_t> bits(symbols.size() * b);
  for (std::size_t g = 0; g < symbols.size(); ++g)
    for (int j = 0; j < b; ++j)
      bits[g * b + j] = (symbols[g] >> (b - 1 - j)) & 1u;
  return bits;
}

}  // namespace permcode
