#pragma once

#include <cstdint>
#include <vector>

#include "permcode/errors.hpp"

namespace permcode {

// Words hold 1-based symbol values; storage is 0-indexed, and every position
// argument in the public API is 1-based.
using Word = std::vector<int>;

bool is_permutation_of(const Word& w, int n);

// A validated bijection on [n].
class Permutation {
 public:
  explicit Permutation(Word values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(v_.size()); }
  int at(int pos) const { return v_[pos - 1]; }
  const Word& values() const { return v_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  Word v_;
};

// Left-inversion counts: entry i is the number of earlier positions holding a
// strictly larger value. Defined for arbitrary words, repeats included.
std::vector<int> lehmer_encode(const Word& w);

// Inverse of lehmer_encode on permutations. Throws malformed_error if the
// vector is not a valid inversion table.
Permutation lehmer_decode(const std::vector<int>& code);

inline constexpr int kUnknown = 0;  // value occurs more than once
inline constexpr int kAbsent = -1;  // value does not occur

// Positions indexed by value: entries[v-1] is where value v sits in the word,
// kUnknown if it appears multiple times, kAbsent if not at all.
struct InverseWord {
  std::vector<int> entries;

  std::vector<int> unknown_values() const;
  std::vector<int> absent_values() const;
};

InverseWord inverse_word(const Word& w, int value_count);

// Positions of [position_count] that no known entry points to.
std::vector<int> missing_positions(const InverseWord& inv, int position_count);

// Relative ranking of the values at the given positions (taken in ascending
// position order). Requires those values to be distinct.
std::vector<int> project(const Word& w, const std::vector<int>& positions);

// Ascent indicator: first entry is always 1, entry i is 1 iff the sequence
// rises at i. Rejects kUnknown / kAbsent entries.
std::vector<std::uint8_t> ascent_vector(const std::vector<int>& entries);

// s * (s-1) * ... * (s-t+1); throws param_error on overflow.
std::uint64_t falling_factorial(int s, int t);

// Bijection between [0, falling_factorial(s, t)) and lexicographically
// ordered t-tuples of distinct values from [s].
std::vector<int> factorial_pack(std::uint64_t ell, int s, int t);
std::uint64_t factorial_unpack(const std::vector<int>& digits, int s);

}  // namespace permcode
