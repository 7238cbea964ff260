#pragma once

#include <stdexcept>
#include <string>

namespace permcode {

// Invalid code or channel parameters (n, t, m out of range, capacity misfit).
struct param_error : std::invalid_argument {
  explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally invalid input: not a permutation, inconsistent multiset word,
// pattern that does not apply to the given word.
struct malformed_error : std::invalid_argument {
  explicit malformed_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Correct inputs, but decoding is impossible: error weight beyond capacity,
// inconsistent redundancy, or multiple consistent interpretations.
struct decode_error : std::runtime_error {
  explicit decode_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permcode
