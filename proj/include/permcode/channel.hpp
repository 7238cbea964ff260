#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "permcode/perm.hpp"

namespace permcode {

enum class Model { A, B, C };

// Up to t positions stick independently: each listed position drops its value
// by one. Values <= m never stick.
struct PatternA {
  std::vector<int> positions;  // 1-based, distinct
  int m = 0;
  bool operator==(const PatternA&) const = default;
};

// Burst: every symbol whose value lies in {j, ..., j+t1-1} and exceeds m
// becomes j.
struct PatternB {
  int j = 0;
  int t1 = 0;
  int m = 0;
  bool operator==(const PatternB&) const = default;
};

// Single deletion-like drop: the value at position i1 falls by t1 and every
// larger value closes the gap by one.
struct PatternC {
  int i1 = 0;
  int t1 = 0;
  int m = 0;
  bool operator==(const PatternC&) const = default;
};

using ErrorPattern = std::variant<PatternA, PatternB, PatternC>;

Model pattern_model(const ErrorPattern& p);

Word inject_a(const Word& w, const PatternA& p);
Word inject_b(const Word& w, const PatternB& p);
Word inject_c(const Word& w, const PatternC& p);
Word inject(const Word& w, const ErrorPattern& p);

// Uniformly random valid pattern for the given word; deterministic in seed.
// Throws malformed_error when no valid pattern exists.
ErrorPattern random_pattern(Model model, const Word& w, int t, int m,
                            std::uint64_t seed);

}  // namespace permcode
