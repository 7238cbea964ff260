#pragma once

#include <cstdint>
#include <vector>

#include "permcode/perm.hpp"
#include "permcode/rs.hpp"

namespace permcode {

// Corrects up to t independent single-step stuck positions among values above
// the threshold m. Redundancy: t_prime extra low-valued marker symbols.
struct CodeParamsA {
  int n = 0;        // data word length
  int t = 0;        // correctable stuck positions
  int m = 0;        // values <= m never stick
  int t_prime = 0;  // marker symbols appended
  int field_bits = 0;
  RSConfig rs;

  static CodeParamsA create(int n, int t, int m);
  int codeword_length() const { return n + t_prime; }
};

// Parity of the left-inversion count at each position holding a value above
// m, in position order.
std::vector<std::uint8_t> b_projection(const Word& w, int m);

// Chain repair: each missing value is matched with the largest repeated value
// below it and the chain interior is shifted back up. The repeated values
// themselves stay ambiguous (both copies remain). Throws malformed_error when
// no consistent chain assignment exists.
Word estimate_sigma_hat(const Word& w);

// Marker interleaving: digit i = number of data symbols preceding marker
// value i. Ties place markers in ascending value order.
Word insert_markers(const Word& shifted_data, const std::vector<int>& digits);
std::vector<int> extract_digits(const Word& word, int t_prime);
Word strip_markers(const Word& word, int t_prime);

Permutation encode_a(const CodeParamsA& params, const Permutation& sigma);
Permutation decode_a(const CodeParamsA& params, const Word& received);

}  // namespace permcode
