#pragma once

#include <cstdint>
#include <vector>

#include "permcode/perm.hpp"

namespace permcode {

// Corrects one stuck position anywhere in the word: its value drops by up to
// t and every larger value closes the gap by one. Redundancy: t_prime + 1
// marker symbols above the data alphabet, positioned to carry the parity
// state plus a position checksum.
struct CodeParamsC {
  int n = 0;
  int t = 0;
  int t_prime = 0;

  static CodeParamsC create(int n, int t);
  int codeword_length() const { return n + t_prime + 1; }
  // Number of distinct parity states the marker placement must encode.
  std::uint64_t parity_states() const;
};

struct ParityChecks {
  int p1 = 0;  // ascent total, mod 2
  int p2 = 0;  // index-weighted ascents, mod t+2
  int p3 = 0;  // triangular-weighted ascents, mod t^2
  int p4 = 0;  // inversion-count total, mod 2t+1

  bool operator==(const ParityChecks&) const = default;
};

// Weighted ascent and inversion sums of an entry sequence, normally the
// inverse word of the data permutation.
ParityChecks parity_checks(const std::vector<int>& entries, int t);

std::uint64_t pack_parities(const ParityChecks& p, int t);
ParityChecks unpack_parities(std::uint64_t ell, int t);

// Every completion of an inverse word with one duplicated value back to a
// full inverse permutation, assuming the duplicate arose from one value
// dropping by at most t. Entries without unknowns are returned unchanged as
// the single candidate.
std::vector<Word> candidate_reconstructions(const InverseWord& inv, int t);

// True when received equals the codeword or differs from it by one stuck
// position: a single value down by at most t, every larger value down by one.
bool is_single_stuck_drop(const Word& codeword, const Word& received, int t);

Permutation encode_c(const CodeParamsC& params, const Permutation& sigma);
Permutation decode_c(const CodeParamsC& params, const Word& received);

}  // namespace permcode
