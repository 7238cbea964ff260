#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permcode/channel.hpp"
#include "permcode/code_a.hpp"
#include "permcode/code_b.hpp"
#include "permcode/code_c.hpp"

namespace permcode {

// Which data words a brute-force run enumerates. Pattern spaces are always
// enumerated exhaustively; this only controls the data side.
struct VerifyScope {
  bool exhaustive = false;  // every permutation (small n only)
  long long samples = 10000;
  std::uint64_t seed = 1;

  static VerifyScope exhaustive_words();
  static VerifyScope sampled(long long samples, std::uint64_t seed);
};

struct TrialFailure {
  Word sigma;
  std::optional<ErrorPattern> pattern;
  Word decoded;  // empty when the decoder threw or no output applies
  std::string note;
};

struct VerificationReport {
  std::string params;  // human-readable run description
  long long cases_tested = 0;
  long long failure_count = 0;
  // Full reproduction data for the first few failures.
  std::vector<TrialFailure> failures;
  double elapsed_seconds = 0.0;

  bool verified() const { return failure_count == 0; }
};

// Round-trip verification: decode(inject(encode(sigma), pattern)) == sigma
// for every data word in scope and every admissible pattern.
VerificationReport exhaustive_verify(const CodeParamsA& params,
                                     const VerifyScope& scope);
VerificationReport exhaustive_verify(const CodeParamsB& params,
                                     const VerifyScope& scope);
VerificationReport exhaustive_verify(const CodeParamsC& params,
                                     const VerifyScope& scope);

// Unique-decodability scan: reports corrupted words reachable from two
// distinct data words. Such a collision defeats every decoder.
VerificationReport ambiguity_scan(const CodeParamsA& params,
                                  const VerifyScope& scope);
VerificationReport ambiguity_scan(const CodeParamsB& params,
                                  const VerifyScope& scope);
VerificationReport ambiguity_scan(const CodeParamsC& params,
                                  const VerifyScope& scope);

// Module-level laws checked by independent enumeration, not by running the
// production decoders.
enum class Lemma { L1, L2, L3, L4, L6, L7, P1, P2 };

const char* lemma_name(Lemma id);
std::optional<Lemma> lemma_from_name(const std::string& name);

// The meaning of (n, t) is lemma-specific:
//   L1, L2  stuck-position laws on raw words of length n, up to t sticks
//   L3      burst block-flagging law on raw words of length n, width <= t
//   L4      marker placement law for the burst code with parameters (n, t)
//   L6      drop reconstruction uniqueness on raw words of length n
//   L7      checksum slot law for words of length n plus t markers
//   P1      ascent-vector locality on words of length n (t ignored)
//   P2      factorial packing bijectivity for t digits over [n]
VerificationReport lemma_suite(Lemma id, int n, int t,
                               const VerifyScope& scope);

}  // namespace permcode
