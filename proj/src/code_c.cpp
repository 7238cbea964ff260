#include "permcode/code_c.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace permcode {

namespace {

std::uint64_t parity_state_count(int t) {
  return 2ull * (t + 2) * (2 * t + 1) * t * t;
}

// 0-based index of a value that occurs exactly once.
int index_of(const Word& w, int value) {
  const auto it = std::find(w.begin(), w.end(), value);
  return static_cast<int>(it - w.begin());
}

}  // namespace

CodeParamsC CodeParamsC::create(int n, int t) {
  if (t < 1) throw param_error("need t >= 1");
  if (n < t + 12)
    throw param_error("need n >= t+12, got n=" + std::to_string(n) +
                      " for t=" + std::to_string(t));
  CodeParamsC p;
  p.n = n;
  p.t = t;
  const std::uint64_t states = parity_state_count(t);
  int tp = 1;
  while (falling_factorial(n - 5, tp) < states) {
    ++tp;
    if (tp > n - 5) throw param_error("marker positions cannot carry the parity state");
  }
  p.t_prime = tp;
  return p;
}

std::uint64_t CodeParamsC::parity_states() const {
  return parity_state_count(t);
}

ParityChecks parity_checks(const std::vector<int>& entries, int t) {
  if (t < 1) throw param_error("need t >= 1");
  const auto b = ascent_vector(entries);
  const auto lehmer = lehmer_encode(entries);
  long long s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int j = 1; j <= static_cast<int>(entries.size()); ++j) {
    s1 += b[j - 1];
    s2 += static_cast<long long>(j) * b[j - 1];
    s3 += static_cast<long long>(j) * (j + 1) / 2 * b[j - 1];
    s4 += lehmer[j - 1];
  }
  ParityChecks p;
  p.p1 = static_cast<int>(s1 % 2);
  p.p2 = static_cast<int>(s2 % (t + 2));
  p.p3 = static_cast<int>(s3 % (t * t));
  p.p4 = static_cast<int>(s4 % (2 * t + 1));
  return p;
}

std::uint64_t pack_parities(const ParityChecks& p, int t) {
  std::uint64_t ell = p.p1;
  ell = ell * (t + 2) + p.p2;
  ell = ell * (t * t) + p.p3;
  ell = ell * (2 * t + 1) + p.p4;
  return ell;
}

ParityChecks unpack_parities(std::uint64_t ell, int t) {
  if (ell >= parity_state_count(t))
    throw param_error("parity rank out of range");
  ParityChecks p;
  p.p4 = static_cast<int>(ell % (2 * t + 1));
  ell /= 2 * t + 1;
  p.p3 = static_cast<int>(ell % (t * t));
  ell /= t * t;
  p.p2 = static_cast<int>(ell % (t + 2));
  p.p1 = static_cast<int>(ell / (t + 2));
  return p;
}

std::vector<Word> candidate_reconstructions(const InverseWord& inv, int t) {
  if (t < 1) throw param_error("need t >= 1");
  if (!inv.absent_values().empty())
    throw malformed_error("inverse word has absent values");
  const auto unknowns = inv.unknown_values();
  if (unknowns.empty()) return {inv.entries};
  if (unknowns.size() > 1)
    throw malformed_error("more than one repeated value");
  const int a = unknowns[0];
  const int len = static_cast<int>(inv.entries.size());
  const auto missing = missing_positions(inv, len + 1);
  if (missing.size() != 2)
    throw malformed_error("repeated value does not leave two open positions");
  std::vector<Word> out;
  for (int pick = 0; pick < 2; ++pick) {
    const int c = missing[pick];
    const int o = missing[1 - pick];
    // Value a sits at c; the value that dropped onto it sat at o and was
    // a + tx before the drop.
    for (int tx = 1; tx <= std::min(t, len + 1 - a); ++tx) {
      Word cand = inv.entries;
      cand[a - 1] = c;
      cand.insert(cand.begin() + (a + tx - 1), o);
      out.push_back(std::move(cand));
    }
  }
  return out;
}

bool is_single_stuck_drop(const Word& codeword, const Word& received, int t) {
  if (codeword.size() != received.size()) return false;
  const int len = static_cast<int>(codeword.size());
  int i1 = -1;
  for (int i = 0; i < len; ++i) {
    const int d = codeword[i] - received[i];
    if (d < 0) return false;
    if (d > 0 && (i1 < 0 || codeword[i] < codeword[i1])) i1 = i;
  }
  if (i1 < 0) return true;
  const int drop = codeword[i1] - received[i1];
  if (drop > t || received[i1] < 1) return false;
  for (int i = 0; i < len; ++i) {
    if (i == i1) continue;
    const int expected = codeword[i] > codeword[i1] ? 1 : 0;
    if (codeword[i] - received[i] != expected) return false;
  }
  return true;
}

Permutation encode_c(const CodeParamsC& params, const Permutation& sigma) {
  if (sigma.size() != params.n)
    throw param_error("data word length does not match the code");
  const int n = params.n;
  const int tp = params.t_prime;
  const std::uint64_t ell =
      pack_parities(parity_checks(sigma.inverse().values(), params.t), params.t);
  const std::vector<int> digits = factorial_pack(ell, n - 5, tp);
  Word word = sigma.values();
  for (int i = 1; i <= tp; ++i)
    word.insert(word.begin() + (digits[i - 1] + 4), n + i);
  // The last marker goes wherever the marker position total becomes a
  // multiple of n+1. Raising the slot moves the total in steps of 0 or 1
  // while covering a range of width n, so some slot always works.
  std::vector<int> q;
  for (int i = 0; i < static_cast<int>(word.size()); ++i)
    if (word[i] > n) q.push_back(i + 1);
  int chosen = 0;
  for (int p = 1; p <= static_cast<int>(word.size()) + 1 && chosen == 0; ++p) {
    long long total = p;
    for (int qi : q) total += qi + (qi >= p ? 1 : 0);
    if (total % (n + 1) == 0) chosen = p;
  }
  word.insert(word.begin() + (chosen - 1), n + tp + 1);
  return Permutation(std::move(word));
}

namespace {

// Peels the top marker and then markers tp..1, whose values appear in the
// received word lowered by shift. Records the digit carried by each marker
// position; returns false when a position falls outside the digit range.
bool peel_markers(Word& w, int n, int tp, int shift, std::vector<int>& digits) {
  w.erase(w.begin() + index_of(w, n + tp + 1 - shift));
  digits.assign(tp, 0);
  for (int i = tp; i >= 1; --i) {
    const int idx = index_of(w, n + i - shift);
    const int pos = idx + 1;
    if (pos < 6 || pos > n) return false;
    digits[i - 1] = pos - 5;
    w.erase(w.begin() + idx);
  }
  return true;
}

}  // namespace

Permutation decode_c(const CodeParamsC& params, const Word& received) {
  const int n = params.n;
  const int tp = params.t_prime;
  const int t = params.t;
  const int total_len = params.codeword_length();
  if (static_cast<int>(received.size()) != total_len)
    throw decode_error("received word has the wrong length");
  std::vector<int> count(total_len + 1, 0);
  for (int v : received) {
    if (v < 1 || v > total_len)
      throw decode_error("received value out of range");
    ++count[v];
  }
  std::vector<int> dups, absent;
  for (int v = 1; v <= total_len; ++v) {
    if (count[v] == 0) absent.push_back(v);
    if (count[v] > 2)
      throw decode_error("value repeated more than twice: not a single drop");
    if (count[v] == 2) dups.push_back(v);
  }

  if (dups.empty()) {
    // A drop always duplicates some value, so this word must be untouched.
    long long marker_total = 0;
    for (int i = 0; i < total_len; ++i)
      if (received[i] > n) marker_total += i + 1;
    if (marker_total % (n + 1) != 0)
      throw decode_error("marker position checksum mismatch");
    Word w = received;
    std::vector<int> digits;
    if (!peel_markers(w, n, tp, 0, digits))
      throw decode_error("marker outside the digit range");
    std::uint64_t ell;
    try {
      ell = factorial_unpack(digits, n - 5);
    } catch (const malformed_error& e) {
      throw decode_error(std::string("marker digits invalid: ") + e.what());
    }
    if (ell >= params.parity_states())
      throw decode_error("marker digits exceed the parity range");
    Permutation sigma{std::move(w)};
    if (parity_checks(sigma.inverse().values(), t) != unpack_parities(ell, t))
      throw decode_error("parity checks mismatch");
    return sigma;
  }

  if (dups.size() > 1 || absent != std::vector<int>{total_len})
    throw decode_error("duplication shape does not match a single drop");
  const int a = dups[0];

  if (a > n) {
    // The drop happened among the markers, so the data symbols are intact.
    Word data;
    for (int v : received)
      if (v <= n) data.push_back(v);
    if (!is_permutation_of(data, n))
      throw decode_error("data symbols do not form a permutation");
    Permutation sigma{std::move(data)};
    if (!is_single_stuck_drop(encode_c(params, sigma).values(), received, t))
      throw decode_error("word is not a drop from the re-encoded candidate");
    return sigma;
  }

  // The duplicated value lies in the data range. Either a marker dropped into
  // the data (one copy of a is the fallen marker) or a data position dropped
  // (every marker then reads one lower). Try each hypothesis and keep the
  // candidates whose re-encoding explains the received word.
  std::set<Word> survivors;
  std::vector<int> a_positions;
  for (int i = 0; i < total_len; ++i)
    if (received[i] == a) a_positions.push_back(i + 1);

  long long high_total = 0;
  for (int i = 0; i < total_len; ++i)
    if (received[i] > n) high_total += i + 1;
  for (int q : a_positions) {
    if ((high_total + q) % (n + 1) != 0) continue;
    Word data;
    for (int i = 0; i < total_len; ++i) {
      if (i + 1 == q || received[i] > n) continue;
      data.push_back(received[i]);
    }
    if (!is_permutation_of(data, n)) continue;
    Permutation sigma{std::move(data)};
    if (is_single_stuck_drop(encode_c(params, sigma).values(), received, t))
      survivors.insert(sigma.values());
  }

  if (a <= n - 1) {
    // Data-drop hypothesis: markers now read n .. n+tp, and the remaining
    // symbols are a one-shorter alphabet with a duplicated.
    do {
      long long shifted_total = 0;
      for (int i = 0; i < total_len; ++i)
        if (received[i] >= n) shifted_total += i + 1;
      if (shifted_total % (n + 1) != 0) break;
      Word w = received;
      std::vector<int> digits;
      if (!peel_markers(w, n, tp, 1, digits)) break;
      std::uint64_t ell;
      try {
        ell = factorial_unpack(digits, n - 5);
      } catch (const malformed_error&) {
        break;
      }
      if (ell >= params.parity_states()) break;
      const ParityChecks target = unpack_parities(ell, t);
      std::vector<Word> cands;
      try {
        cands = candidate_reconstructions(inverse_word(w, n - 1), t);
      } catch (const malformed_error&) {
        break;
      }
      for (const Word& cand : cands) {
        if (parity_checks(cand, t) != target) continue;
        Permutation sigma = Permutation(cand).inverse();
        if (is_single_stuck_drop(encode_c(params, sigma).values(), received, t))
          survivors.insert(sigma.values());
      }
    } while (false);
  }

  if (survivors.empty())
    throw decode_error("no decoding consistent with a single drop");
  if (survivors.size() > 1)
    throw decode_error("ambiguous word: several consistent decodings");
  return Permutation(*survivors.begin());
}

}  // namespace permcode
