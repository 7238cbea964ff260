#include "permcode/channel.hpp"

#include <algorithm>
#include <string>

#include "permcode/rng.hpp"

namespace permcode {

Model pattern_model(const ErrorPattern& p) {
  if (std::holds_alternative<PatternA>(p)) return Model::A;
  if (std::holds_alternative<PatternB>(p)) return Model::B;
  return Model::C;
}

Word inject_a(const Word& w, const PatternA& p) {
  std::vector<int> pos = p.positions;
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw malformed_error("stuck positions must be distinct");
  Word out = w;
  for (int i : pos) {
    if (i < 1 || i > static_cast<int>(w.size()))
      throw malformed_error("stuck position out of range");
    const int v = w[i - 1];
    if (v <= p.m)
      throw malformed_error("position " + std::to_string(i) +
                            " holds an untouchable value");
    if (v < 2)
      throw malformed_error("value 1 cannot drop below the alphabet");
    out[i - 1] = v - 1;
  }
  return out;
}

Word inject_b(const Word& w, const PatternB& p) {
  if (p.j < 1 || p.t1 < 1)
    throw malformed_error("burst needs j >= 1 and t1 >= 1");
  Word out = w;
  for (int& v : out)
    if (v > p.m && v >= p.j && v <= p.j + p.t1 - 1) v = p.j;
  return out;
}

Word inject_c(const Word& w, const PatternC& p) {
  if (p.i1 < 1 || p.i1 > static_cast<int>(w.size()))
    throw malformed_error("drop position out of range");
  if (p.t1 < 1) throw malformed_error("drop amount must be at least 1");
  const int v = w[p.i1 - 1];
  if (v <= p.m) throw malformed_error("drop position holds an untouchable value");
  if (v - p.t1 < 1) throw malformed_error("drop would leave the alphabet");
  Word out = w;
  out[p.i1 - 1] = v - p.t1;
  for (int i = 0; i < static_cast<int>(out.size()); ++i)
    if (i != p.i1 - 1 && w[i] > v) --out[i];
  return out;
}

Word inject(const Word& w, const ErrorPattern& p) {
  return std::visit(
      [&](const auto& pat) -> Word {
        using T = std::decay_t<decltype(pat)>;
        if constexpr (std::is_same_v<T, PatternA>) {
          return inject_a(w, pat);
        } else if constexpr (std::is_same_v<T, PatternB>) {
          return inject_b(w, pat);
        } else {
          return inject_c(w, pat);
        }
      },
      p);
}

ErrorPattern random_pattern(Model model, const Word& w, int t, int m,
                            std::uint64_t seed) {
  auto rng = seeded_rng(seed, 0);
  const int len = static_cast<int>(w.size());
  switch (model) {
    case Model::A: {
      if (t < 0) throw malformed_error("negative error budget");
      std::vector<int> admissible;
      for (int i = 1; i <= len; ++i)
        if (w[i - 1] > m && w[i - 1] >= 2) admissible.push_back(i);
      if (static_cast<int>(admissible.size()) < t)
        throw malformed_error("no valid pattern: fewer than t movable values");
      // Partial Fisher-Yates, then canonical ascending order.
      for (int i = 0; i < t; ++i) {
        const int j = i + static_cast<int>(uniform_below(
                              rng, admissible.size() - i));
        std::swap(admissible[i], admissible[j]);
      }
      PatternA p;
      p.positions.assign(admissible.begin(), admissible.begin() + t);
      std::sort(p.positions.begin(), p.positions.end());
      p.m = m;
      return p;
    }
    case Model::B: {
      std::uint64_t count = 0;
      for (int t1 = 1; t1 <= std::min(t, len); ++t1)
        count += static_cast<std::uint64_t>(len - t1 + 1);
      if (count == 0)
        throw malformed_error("no valid pattern: burst budget is zero");
      std::uint64_t idx = uniform_below(rng, count);
      for (int t1 = 1; t1 <= std::min(t, len); ++t1) {
        const std::uint64_t span = static_cast<std::uint64_t>(len - t1 + 1);
        if (idx < span) return PatternB{static_cast<int>(idx) + 1, t1, m};
        idx -= span;
      }
      throw malformed_error("unreachable burst index");
    }
    case Model::C: {
      std::vector<PatternC> all;
      for (int i = 1; i <= len; ++i) {
        const int v = w[i - 1];
        if (v <= m) continue;
        for (int t1 = 1; t1 <= std::min(t, v - 1); ++t1)
          all.push_back(PatternC{i, t1, m});
      }
      if (all.empty())
        throw malformed_error("no valid pattern: nothing can drop");
      return all[uniform_below(rng, all.size())];
    }
  }
  throw malformed_error("unknown channel model");
}

}  // namespace permcode
