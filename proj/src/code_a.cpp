#include "permcode/code_a.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>

#include "permcode/intpow.hpp"

namespace permcode {

using detail::u128;

CodeParamsA CodeParamsA::create(int n, int t, int m) {
  if (n < 2) throw param_error("need n >= 2");
  if (t < 1) throw param_error("need t >= 1");
  if (m < 0 || m > n - 1) throw param_error("need 0 <= m <= n-1");
  CodeParamsA p;
  p.n = n;
  p.t = t;
  p.m = m;
  const int span = n - m;  // values that can stick live above m
  p.t_prime = detail::min_power_at_least(
      n, detail::checked_pow(static_cast<std::uint64_t>(span), t));
  if (m < p.t_prime + 2)
    throw param_error("threshold too low: need m >= t'+2, got m=" +
                      std::to_string(m) + ", t'=" + std::to_string(p.t_prime));
  p.field_bits =
      span <= 1 ? 1 : std::bit_width(static_cast<unsigned>(span - 1));
  p.rs.field_bits = p.field_bits;
  p.rs.k = (span + p.field_bits - 1) / p.field_bits;
  p.rs.t = t;
  if ((1u << p.field_bits) < static_cast<unsigned>(p.rs.k + t + 1))
    throw param_error("projection too long for its field: need 2^b >= k+t+1");
  // The t redundancy symbols must fit losslessly into t' base-n digits.
  if (detail::checked_pow(2, t * p.field_bits) >
      detail::checked_pow(static_cast<std::uint64_t>(n), p.t_prime))
    throw param_error("redundancy does not fit the marker digits");
  return p;
}

std::vector<std::uint8_t> b_projection(const Word& w, int m) {
  const std::vector<int> code = lehmer_encode(w);
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > m) bits.push_back(static_cast<std::uint8_t>(code[i] & 1));
  return bits;
}

Word estimate_sigma_hat(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> count(n + 1, 0);
  for (int v : w) {
    if (v < 1 || v > n) throw malformed_error("value outside [n]");
    if (++count[v] > 2) throw malformed_error("value repeated more than twice");
  }
  std::vector<int> missing;
  for (int v = n; v >= 1; --v)
    if (count[v] == 0) missing.push_back(v);
  std::vector<char> consumed(n + 1, 0);
  Word out = w;
  for (int v : missing) {
    int r = v - 1;
    while (r >= 1 && count[r] != 2) --r;
    if (r < 1) throw malformed_error("missing value has no repeat below it");
    for (int u = r; u <= v; ++u) {
      if (consumed[u]) throw malformed_error("overlapping repair chains");
      consumed[u] = 1;
    }
    for (int u = r + 1; u < v; ++u)
      if (count[u] != 1)
        throw malformed_error("chain interior value not present exactly once");
    for (int& x : out)
      if (x > r && x < v) ++x;
  }
  return out;
}

Word insert_markers(const Word& shifted_data, const std::vector<int>& digits) {
  const int n = static_cast<int>(shifted_data.size());
  const int tp = static_cast<int>(digits.size());
  for (int d : digits)
    if (d < 0 || d > n - 1)
      throw malformed_error("marker digit outside [0, n-1]");
  Word out;
  out.reserve(n + tp);
  for (int c = 0; c <= n; ++c) {
    for (int i = 0; i < tp; ++i)
      if (digits[i] == c) out.push_back(i + 1);
    if (c < n) out.push_back(shifted_data[c]);
  }
  return out;
}

std::vector<int> extract_digits(const Word& word, int t_prime) {
  std::vector<int> digits(t_prime, -1);
  std::vector<int> data_before(word.size() + 1, 0);
  int data_seen = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v >= 1 && v <= t_prime) {
      if (digits[v - 1] != -1)
        throw malformed_error("marker value appears twice");
      digits[v - 1] = data_seen;
    } else {
      ++data_seen;
    }
  }
  for (int d : digits)
    if (d == -1) throw malformed_error("marker value missing");
  return digits;
}

Word strip_markers(const Word& word, int t_prime) {
  Word out;
  for (int v : word) {
    if (v <= t_prime) continue;
    out.push_back(v - t_prime);
  }
  return out;
}

namespace {

std::vector<int> redundancy_digits(const CodeParamsA& p,
                                   const std::vector<std::uint32_t>& red) {
  const auto bits = unpack_bits_msb(red, p.field_bits);
  u128 value = 0;
  for (std::uint8_t b : bits) value = (value << 1) | b;
  std::vector<int> digits(p.t_prime, 0);
  for (int i = p.t_prime - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(value % p.n);
    value /= p.n;
  }
  if (value != 0) throw decode_error("redundancy exceeds digit capacity");
  return digits;
}

std::vector<std::uint32_t> digits_to_redundancy(const CodeParamsA& p,
                                                const std::vector<int>& digits) {
  u128 value = 0;
  for (int d : digits) value = value * p.n + d;
  const int nbits = p.t * p.field_bits;
  if (value >> nbits) throw decode_error("marker digits exceed redundancy range");
  std::vector<std::uint8_t> bits(nbits);
  for (int i = 0; i < nbits; ++i)
    bits[i] = static_cast<std::uint8_t>((value >> (nbits - 1 - i)) & 1);
  return pack_bits_msb(bits, p.field_bits);
}

}  // namespace

Permutation encode_a(const CodeParamsA& p, const Permutation& sigma) {
  if (sigma.size() != p.n)
    throw malformed_error("permutation length does not match n");
  const auto proj = b_projection(sigma.values(), p.m);
  const auto message = pack_bits_msb(proj, p.field_bits);
  const ReedSolomonErasure rs(p.rs);
  const auto digits = redundancy_digits(p, rs.redundancy(message));
  Word shifted = sigma.values();
  for (int& v : shifted) v += p.t_prime;
  return Permutation(insert_markers(shifted, digits));
}

Permutation decode_a(const CodeParamsA& p, const Word& received) {
  if (static_cast<int>(received.size()) != p.codeword_length())
    throw malformed_error("received word has wrong length");
  for (int v : received)
    if (v < 1 || v > p.codeword_length())
      throw malformed_error("received value out of range");

  std::vector<int> digits;
  try {
    digits = extract_digits(received, p.t_prime);
  } catch (const malformed_error& e) {
    throw decode_error(std::string("marker structure damaged: ") + e.what());
  }
  const Word data = strip_markers(received, p.t_prime);

  Word est;
  try {
    est = estimate_sigma_hat(data);
  } catch (const malformed_error& e) {
    throw decode_error(std::string("no consistent chain repair: ") + e.what());
  }

  // Repeated values: one copy sits at the stuck position, the other is the
  // value's rightful owner.
  std::map<int, std::vector<int>> holders;  // value -> positions, ascending
  for (int i = 0; i < p.n; ++i) holders[est[i]].push_back(i + 1);
  std::vector<std::pair<int, int>> pairs;  // (earlier, later)
  for (const auto& [v, pos] : holders) {
    if (pos.size() < 2) continue;
    if (v <= p.m)
      throw decode_error("collision below the protected threshold");
    pairs.emplace_back(pos[0], pos[1]);
  }
  if (static_cast<int>(pairs.size()) > p.t)
    throw decode_error("more collisions than the code can correct");

  // Bit slots of the projection, by position.
  std::vector<int> domain;
  for (int i = 0; i < p.n; ++i)
    if (est[i] > p.m) domain.push_back(i + 1);
  if (static_cast<int>(domain.size()) != p.n - p.m)
    throw decode_error("projection domain has unexpected size");
  auto slot_of = [&](int pos) {
    const auto it = std::lower_bound(domain.begin(), domain.end(), pos);
    return static_cast<int>(it - domain.begin());
  };

  const auto est_bits = b_projection(est, p.m);
  const auto est_symbols = pack_bits_msb(est_bits, p.field_bits);
  std::vector<char> slot_erased(est_bits.size(), 0);
  for (const auto& [lo, hi] : pairs) slot_erased[slot_of(hi)] = 1;

  std::vector<std::optional<std::uint32_t>> codeword;
  for (int g = 0; g < p.rs.k; ++g) {
    bool erased = false;
    for (int j = 0; j < p.field_bits; ++j) {
      const std::size_t s = static_cast<std::size_t>(g) * p.field_bits + j;
      if (s < slot_erased.size() && slot_erased[s]) erased = true;
    }
    if (erased)
      codeword.emplace_back(std::nullopt);
    else
      codeword.emplace_back(est_symbols[g]);
  }
  for (std::uint32_t s : digits_to_redundancy(p, digits))
    codeword.emplace_back(s);

  const ReedSolomonErasure rs(p.rs);
  const auto message = rs.recover(codeword);
  auto true_bits = unpack_bits_msb(message, p.field_bits);
  true_bits.resize(est_bits.size());

  // Erased slots outside the collision pairs must come back unchanged.
  for (std::size_t s = 0; s < est_bits.size(); ++s) {
    bool pair_slot = false;
    for (const auto& [lo, hi] : pairs)
      if (slot_of(hi) == static_cast<int>(s)) pair_slot = true;
    if (!pair_slot && true_bits[s] != est_bits[s])
      throw decode_error("recovered projection conflicts outside collisions");
  }

  Word out = est;
  for (const auto& [lo, hi] : pairs) {
    const int s = slot_of(hi);
    // The later copy's parity survives the collision untouched exactly when
    // the stuck position is the later one.
    if (true_bits[s] == est_bits[s])
      ++out[hi - 1];
    else
      ++out[lo - 1];
  }
  if (!is_permutation_of(out, p.n))
    throw decode_error("collision resolution did not yield a permutation");
  return Permutation(out);
}

}  // namespace permcode
