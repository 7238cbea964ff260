#pragma once

#include <vector>

#include "permcode/perm.hpp"

namespace permcode {

// Corrects one burst: all values in a window of width at most t stick to the
// window floor. Redundancy: t'+1 marker symbols spread through the value
// range at arithmetic positions.
struct CodeParamsB {
  int n = 0;
  int t = 0;
  int t_prime = 0;

  static CodeParamsB create(int n, int t);
  int codeword_length() const { return n + t_prime + 1; }
  // Marker values, ascending; the largest always equals codeword_length().
  std::vector<int> redundancy_values() const;
  // The n non-marker values, ascending.
  std::vector<int> value_map() const;
};

// Per-block relative rankings of a word over [n]. Side 1 blocks cover values
// {2t(i-1)+1 .. 2ti}; side 2 shifts the grid by t and starts at t+1. Each
// vector lists, in position order, the rank of the element inside its block,
// padded with zeros to length 2t. Every block value must occur exactly once.
std::vector<std::vector<int>> block_rankings(const Word& w, int t, int side);

struct RankingSums {
  std::vector<int> r1, r2;  // each length 2t, entries mod 2t

  bool operator==(const RankingSums&) const = default;
};

RankingSums ranking_sums(const Word& w, int t);

struct ErasureFlags {
  std::vector<int> side1, side2;  // 1-based ids of blocks missing a value

  bool operator==(const ErasureFlags&) const = default;
};

// Flags every block that lost at least one of its values.
ErasureFlags declare_erasures(const Word& w, int n, int t);

Permutation encode_b(const CodeParamsB& params, const Permutation& sigma);
Permutation decode_b(const CodeParamsB& params, const Word& received);

}  // namespace permcode
