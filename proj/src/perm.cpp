#include "permcode/perm.hpp"

#include <algorithm>
#include <cstdint>

namespace permcode {

bool is_permutation_of(const Word& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : w) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

Permutation::Permutation(Word values) : v_(std::move(values)) {
  if (!is_permutation_of(v_, static_cast<int>(v_.size())))
    throw malformed_error("word is not a permutation");
}

Permutation Permutation::identity(int n) {
  Word v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  Word inv(v_.size());
  for (int i = 0; i < static_cast<int>(v_.size()); ++i) inv[v_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::vector<int> lehmer_encode(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> code(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (w[j] > w[i]) ++code[i];
  return code;
}

Permutation lehmer_decode(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  for (int i = 0; i < n; ++i)
    if (code[i] < 0 || code[i] > i)
      throw malformed_error("invalid inversion table entry");
  // Entry i says the value at i is the (code[i]+1)-th largest among the first
  // i+1 values, so peel positions from the right out of a shrinking pool.
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;  // ascending
  Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    const int idx = static_cast<int>(pool.size()) - 1 - code[i];
    w[i] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return Permutation(std::move(w));
}

InverseWord inverse_word(const Word& w, int value_count) {
  InverseWord inv;
  inv.entries.assign(value_count, kAbsent);
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    const int v = w[i];
    if (v < 1) throw malformed_error("word value below 1");
    if (v > value_count) continue;
    inv.entries[v - 1] = inv.entries[v - 1] == kAbsent ? i + 1 : kUnknown;
  }
  return inv;
}

std::vector<int> InverseWord::unknown_values() const {
  std::vector<int> out;
  for (int v = 1; v <= static_cast<int>(entries.size()); ++v)
    if (entries[v - 1] == kUnknown) out.push_back(v);
  return out;
}

std::vector<int> InverseWord::absent_values() const {
  std::vector<int> out;
  for (int v = 1; v <= static_cast<int>(entries.size()); ++v)
    if (entries[v - 1] == kAbsent) out.push_back(v);
  return out;
}

std::vector<int> missing_positions(const InverseWord& inv, int position_count) {
  std::vector<char> hit(position_count, 0);
  for (int e : inv.entries)
    if (e >= 1 && e <= position_count) hit[e - 1] = 1;
  std::vector<int> out;
  for (int p = 1; p <= position_count; ++p)
    if (!hit[p - 1]) out.push_back(p);
  return out;
}

std::vector<int> project(const Word& w, const std::vector<int>& positions) {
  std::vector<int> pos = positions;
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw malformed_error("projection positions must be distinct");
  std::vector<int> vals;
  vals.reserve(pos.size());
  for (int p : pos) {
    if (p < 1 || p > static_cast<int>(w.size()))
      throw malformed_error("projection position out of range");
    vals.push_back(w[p - 1]);
  }
  const int k = static_cast<int>(vals.size());
  std::vector<int> rank(k, 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i != j && vals[i] == vals[j])
        throw malformed_error("projection values must be distinct");
      if (vals[j] < vals[i]) ++rank[i];
    }
  return rank;
}

std::vector<std::uint8_t> ascent_vector(const std::vector<int>& entries) {
  if (entries.empty()) return {};
  std::vector<std::uint8_t> b(entries.size());
  for (int e : entries)
    if (e < 1) throw malformed_error("ascent vector needs fully known entries");
  b[0] = 1;
  for (std::size_t i = 1; i < entries.size(); ++i)
    b[i] = entries[i] > entries[i - 1] ? 1 : 0;
  return b;
}

std::uint64_t falling_factorial(int s, int t) {
  if (t < 0 || s < t) throw param_error("falling factorial needs 0 <= t <= s");
  unsigned __int128 acc = 1;
  for (int i = 0; i < t; ++i) {
    acc *= static_cast<unsigned>(s - i);
    if (acc > UINT64_MAX) throw param_error("falling factorial overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<int> factorial_pack(std::uint64_t ell, int s, int t) {
  if (ell >= falling_factorial(s, t))
    throw param_error("rank out of range for factorial packing");
  std::vector<int> avail(s);
  for (int i = 0; i < s; ++i) avail[i] = i + 1;
  std::vector<int> digits;
  digits.reserve(t);
  for (int i = 0; i < t; ++i) {
    const std::uint64_t base = falling_factorial(s - 1 - i, t - 1 - i);
    const int d = static_cast<int>(ell / base);
    ell %= base;
    digits.push_back(avail[d]);
    avail.erase(avail.begin() + d);
  }
  return digits;
}

std::uint64_t factorial_unpack(const std::vector<int>& digits, int s) {
  const int t = static_cast<int>(digits.size());
  if (s < t) throw param_error("more digits than symbols");
  std::vector<int> avail(s);
  for (int i = 0; i < s; ++i) avail[i] = i + 1;
  std::uint64_t ell = 0;
  for (int i = 0; i < t; ++i) {
    auto it = std::find(avail.begin(), avail.end(), digits[i]);
    if (it == avail.end())
      throw malformed_error("factorial digits must be distinct values in [s]");
    ell += static_cast<std::uint64_t>(it - avail.begin()) *
           falling_factorial(s - 1 - i, t - 1 - i);
    avail.erase(it);
  }
  return ell;
}

}  // namespace permcode
