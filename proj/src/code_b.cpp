#include "permcode/code_b.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "permcode/intpow.hpp"

namespace permcode {

using detail::u128;

namespace {

struct Block {
  int lo, hi;  // inclusive value range
};

std::vector<Block> side_blocks(int n, int t, int side) {
  std::vector<Block> blocks;
  int lo = side == 1 ? 1 : t + 1;
  while (lo <= n) {
    blocks.push_back({lo, std::min(lo + 2 * t - 1, n)});
    lo += 2 * t;
  }
  return blocks;
}

}  // namespace

CodeParamsB CodeParamsB::create(int n, int t) {
  if (t < 1) throw param_error("need t >= 1");
  if (n < 2 * t * (t + 1))
    throw param_error("need n >= 2t(t+1), got n=" + std::to_string(n) +
                      " for t=" + std::to_string(t));
  CodeParamsB p;
  p.n = n;
  p.t = t;
  const u128 rank_space =
      detail::checked_pow(static_cast<std::uint64_t>(2 * t), 4 * t);
  p.t_prime = detail::min_power_at_least(n, rank_space);
  if (n - t * (p.t_prime + 1) + (t + 1) < 1)
    throw param_error("marker values would leave the alphabet");
  return p;
}

std::vector<int> CodeParamsB::redundancy_values() const {
  std::vector<int> rv(t_prime + 1);
  for (int i = 1; i <= t_prime + 1; ++i)
    rv[i - 1] = n - t * (t_prime + 1) + (t + 1) * i;
  return rv;
}

std::vector<int> CodeParamsB::value_map() const {
  const auto rv = redundancy_values();
  std::vector<char> is_rv(codeword_length() + 1, 0);
  for (int v : rv) is_rv[v] = 1;
  std::vector<int> vmap;
  vmap.reserve(n);
  for (int v = 1; v <= codeword_length(); ++v)
    if (!is_rv[v]) vmap.push_back(v);
  return vmap;
}

std::vector<std::vector<int>> block_rankings(const Word& w, int t, int side) {
  if (side != 1 && side != 2) throw param_error("side must be 1 or 2");
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (w[i] < 1) throw malformed_error("value below 1");
    if (w[i] > n) continue;
    if (pos[w[i]] != 0) throw malformed_error("block value appears twice");
    pos[w[i]] = i + 1;
  }
  std::vector<std::vector<int>> out;
  for (const Block& b : side_blocks(n, t, side)) {
    std::vector<std::pair<int, int>> elems;  // (position, rank in block)
    for (int u = b.lo; u <= b.hi; ++u) {
      if (pos[u] == 0) throw malformed_error("block value missing");
      elems.emplace_back(pos[u], u - b.lo + 1);
    }
    std::sort(elems.begin(), elems.end());
    std::vector<int> vec(2 * t, 0);
    for (std::size_t l = 0; l < elems.size(); ++l) vec[l] = elems[l].second;
    out.push_back(std::move(vec));
  }
  return out;
}

RankingSums ranking_sums(const Word& w, int t) {
  RankingSums sums;
  sums.r1.assign(2 * t, 0);
  sums.r2.assign(2 * t, 0);
  for (const auto& vec : block_rankings(w, t, 1))
    for (int l = 0; l < 2 * t; ++l) sums.r1[l] = (sums.r1[l] + vec[l]) % (2 * t);
  for (const auto& vec : block_rankings(w, t, 2))
    for (int l = 0; l < 2 * t; ++l) sums.r2[l] = (sums.r2[l] + vec[l]) % (2 * t);
  return sums;
}

ErasureFlags declare_erasures(const Word& w, int n, int t) {
  std::vector<int> count(n + 1, 0);
  for (int v : w)
    if (v >= 1 && v <= n) ++count[v];
  ErasureFlags flags;
  for (int side = 1; side <= 2; ++side) {
    const auto blocks = side_blocks(n, t, side);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int u = blocks[b].lo; u <= blocks[b].hi; ++u)
        if (count[u] == 0) {
          (side == 1 ? flags.side1 : flags.side2)
              .push_back(static_cast<int>(b) + 1);
          break;
        }
  }
  return flags;
}

namespace {

// Packs the two ranking sums as base-2t digits, most significant first.
u128 pack_sums(const RankingSums& sums, int t) {
  u128 value = 0;
  for (int l = 0; l < 2 * t; ++l) value = value * (2 * t) + sums.r1[l];
  for (int l = 0; l < 2 * t; ++l) value = value * (2 * t) + sums.r2[l];
  return value;
}

RankingSums unpack_sums(u128 value, int t) {
  RankingSums sums;
  sums.r1.assign(2 * t, 0);
  sums.r2.assign(2 * t, 0);
  for (int l = 2 * t - 1; l >= 0; --l) {
    sums.r2[l] = static_cast<int>(value % (2 * t));
    value /= 2 * t;
  }
  for (int l = 2 * t - 1; l >= 0; --l) {
    sums.r1[l] = static_cast<int>(value % (2 * t));
    value /= 2 * t;
  }
  return sums;
}

Word insert_valued_markers(const Word& data,
                           const std::vector<int>& marker_values,
                           const std::vector<int>& digits) {
  const int n = static_cast<int>(data.size());
  Word out;
  out.reserve(n + marker_values.size());
  for (int c = 0; c <= n; ++c) {
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] == c) out.push_back(marker_values[i]);
    if (c < n) out.push_back(data[c]);
  }
  return out;
}

// True when the word arose from the codeword through one burst of width at
// most t (or no error at all).
bool burst_consistent(const Word& codeword, const Word& w, int t) {
  if (codeword.size() != w.size()) return false;
  std::vector<int> diff;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (codeword[i] != w[i]) diff.push_back(i);
  if (diff.empty()) return true;
  const int j = w[diff[0]];
  int mx = 0;
  for (int i : diff) {
    if (w[i] != j) return false;
    if (codeword[i] <= j) return false;
    mx = std::max(mx, codeword[i]);
  }
  // Every value in (j, mx] must have been in the window, so its position
  // must be among the changed ones.
  if (static_cast<int>(diff.size()) != mx - j) return false;
  return mx - j + 1 <= t;
}

}  // namespace

Permutation encode_b(const CodeParamsB& p, const Permutation& sigma) {
  if (sigma.size() != p.n)
    throw malformed_error("permutation length does not match n");
  const RankingSums sums = ranking_sums(sigma.values(), p.t);
  u128 value = pack_sums(sums, p.t);
  std::vector<int> digits(p.t_prime + 1, 0);
  for (int i = p.t_prime - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(value % p.n);
    value /= p.n;
  }
  if (value != 0) throw param_error("ranking sums exceed digit capacity");
  int acc = 0;
  for (int i = 0; i < p.t_prime; ++i) acc = (acc + digits[i]) % p.n;
  digits[p.t_prime] = (p.n - acc) % p.n;

  const auto vmap = p.value_map();
  Word relabeled(p.n);
  for (int i = 0; i < p.n; ++i) relabeled[i] = vmap[sigma.at(i + 1) - 1];
  return Permutation(
      insert_valued_markers(relabeled, p.redundancy_values(), digits));
}

namespace {

struct DecodeContextB {
  const CodeParamsB& p;
  const Word& w;
  std::vector<int> rv;
  std::vector<int> vmap;
  std::vector<int> vidx;  // value -> 1-based index into vmap, 0 for markers
};

// Evaluates one assignment of marker positions; returns candidates that
// survive every structural filter (re-encode verification happens later).
std::vector<Word> evaluate_hypothesis(const DecodeContextB& ctx,
                                      const std::vector<int>& mpos) {
  const CodeParamsB& p = ctx.p;
  const int N = p.codeword_length(), n = p.n, t = p.t, tp = p.t_prime;
  std::vector<char> is_marker(N + 1, 0);
  for (int q : mpos) is_marker[q] = 1;

  // Digits: data symbols strictly before each marker.
  std::vector<int> digits(tp + 1, 0);
  {
    std::vector<int> data_before(N + 2, 0);
    for (int q = 1; q <= N; ++q)
      data_before[q + 1] = data_before[q] + (is_marker[q] ? 0 : 1);
    for (int i = 0; i <= tp; ++i) digits[i] = data_before[mpos[i]];
  }
  int acc = 0;
  for (int d : digits) {
    if (d < 0 || d > n - 1) return {};
    acc = (acc + d) % n;
  }
  if (acc != 0) return {};

  u128 packed = 0;
  for (int i = 0; i < tp; ++i) packed = packed * n + digits[i];
  if (packed >= detail::checked_pow(static_cast<std::uint64_t>(2 * t), 4 * t))
    return {};
  const RankingSums sums = unpack_sums(packed, t);

  // Data word in value and index form.
  Word data;
  data.reserve(n);
  for (int q = 1; q <= N; ++q)
    if (!is_marker[q]) data.push_back(ctx.w[q - 1]);
  std::vector<int> ii(n);
  std::vector<int> aliens;  // 1-based data positions showing a marker value
  int alien_value = 0;
  for (int q = 1; q <= n; ++q) {
    ii[q - 1] = ctx.vidx[data[q - 1]];
    if (ii[q - 1] == 0) {
      if (alien_value == 0)
        alien_value = data[q - 1];
      else if (alien_value != data[q - 1])
        return {};
      aliens.push_back(q);
    }
  }

  std::vector<int> cnt(n + 1, 0);
  for (int x : ii)
    if (x > 0) ++cnt[x];
  std::vector<int> mi;
  int dup = 0;
  for (int x = 1; x <= n; ++x) {
    if (cnt[x] == 0) mi.push_back(x);
    if (cnt[x] >= 2) {
      if (dup != 0) return {};
      dup = x;
    }
  }

  int w_lo = 0, w_hi = 0;
  std::vector<int> affected;  // data positions whose index is uncertain
  if (aliens.empty() && dup == 0) {
    if (!mi.empty()) return {};
    return {ii};  // clean data; still subject to re-encode verification
  }
  if (!aliens.empty() && dup != 0) return {};
  if (!aliens.empty()) {
    // The burst floor is a marker value and swallowed |mi| data values.
    if (mi.size() != aliens.size()) return {};
    for (std::size_t i = 1; i < mi.size(); ++i)
      if (mi[i] != mi[0] + static_cast<int>(i)) return {};
    const auto it =
        std::upper_bound(ctx.vmap.begin(), ctx.vmap.end(), alien_value);
    if (it == ctx.vmap.end() ||
        static_cast<int>(it - ctx.vmap.begin()) + 1 != mi.front())
      return {};
    if (ctx.vmap[mi.back() - 1] - alien_value + 1 > t) return {};
    w_lo = mi.front();
    w_hi = mi.back();
    affected = aliens;
  } else {
    const int c = cnt[dup];
    if (static_cast<int>(mi.size()) != c - 1) return {};
    for (std::size_t i = 0; i < mi.size(); ++i)
      if (mi[i] != dup + 1 + static_cast<int>(i)) return {};
    if (ctx.vmap[dup + c - 2] - ctx.vmap[dup - 1] + 1 > t) return {};
    w_lo = dup;
    w_hi = dup + c - 1;
    for (int q = 1; q <= n; ++q)
      if (ii[q - 1] == dup) affected.push_back(q);
  }

  std::vector<Word> out;
  for (int side = 1; side <= 2; ++side) {
    const auto blocks = side_blocks(n, t, side);
    int starred = -1;
    bool ok = true;
    for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
      bool hit = false;
      for (int x : mi)
        if (x >= blocks[b].lo && x <= blocks[b].hi) hit = true;
      if (!hit) continue;
      if (starred != -1) ok = false;
      starred = static_cast<int>(b);
    }
    if (!ok || starred == -1) continue;
    const Block star = blocks[starred];
    if (w_lo < star.lo || w_hi > star.hi) continue;

    // Slot sums of the intact blocks on this side.
    std::vector<int> others(2 * t, 0);
    bool computable = true;
    for (std::size_t b = 0; b < blocks.size() && computable; ++b) {
      if (static_cast<int>(b) == starred) continue;
      std::vector<std::pair<int, int>> elems;
      for (int u = blocks[b].lo; u <= blocks[b].hi && computable; ++u) {
        if (cnt[u] != 1) {
          computable = false;
          break;
        }
        for (int q = 1; q <= n; ++q)
          if (ii[q - 1] == u) {
            elems.emplace_back(q, u - blocks[b].lo + 1);
            break;
          }
      }
      if (!computable) break;
      std::sort(elems.begin(), elems.end());
      for (std::size_t l = 0; l < elems.size(); ++l)
        others[l] = (others[l] + elems[l].second) % (2 * t);
    }
    if (!computable) continue;

    const std::vector<int>& target = side == 1 ? sums.r1 : sums.r2;
    const int size = star.hi - star.lo + 1;
    std::vector<int> entries(size, 0);
    bool valid = true;
    for (int l = 0; l < 2 * t && valid; ++l) {
      const int rho = ((target[l] - others[l]) % (2 * t) + 2 * t) % (2 * t);
      if (l < size) {
        const int e = rho == 0 ? 2 * t : rho;
        if (e > size) valid = false;
        entries[l] = e;
      } else if (rho != 0) {
        valid = false;
      }
    }
    if (!valid || !is_permutation_of(entries, size)) continue;

    std::vector<int> q_pos;
    for (int q = 1; q <= n; ++q)
      if (ii[q - 1] >= star.lo && ii[q - 1] <= star.hi) q_pos.push_back(q);
    q_pos.insert(q_pos.end(), aliens.begin(), aliens.end());
    std::sort(q_pos.begin(), q_pos.end());
    if (static_cast<int>(q_pos.size()) != size) continue;

    std::vector<char> is_affected(n + 1, 0);
    for (int q : affected) is_affected[q] = 1;
    Word fixed = ii;
    bool consistent = true;
    for (int l = 0; l < size && consistent; ++l) {
      const int idx = star.lo - 1 + entries[l];
      if (!is_affected[q_pos[l]] && ii[q_pos[l] - 1] != idx)
        consistent = false;
      fixed[q_pos[l] - 1] = idx;
    }
    if (!consistent || !is_permutation_of(fixed, n)) continue;
    out.push_back(fixed);
  }
  return out;
}

}  // namespace

Permutation decode_b(const CodeParamsB& p, const Word& received) {
  const int N = p.codeword_length(), n = p.n, t = p.t, tp = p.t_prime;
  if (static_cast<int>(received.size()) != N)
    throw malformed_error("received word has wrong length");
  for (int v : received)
    if (v < 1 || v > N) throw malformed_error("received value out of range");

  DecodeContextB ctx{p, received, p.redundancy_values(), p.value_map(), {}};
  ctx.vidx.assign(N + 1, 0);
  for (int i = 0; i < n; ++i) ctx.vidx[ctx.vmap[i]] = i + 1;

  std::vector<std::vector<int>> pos(N + 1);
  for (int i = 0; i < N; ++i) pos[received[i]].push_back(i + 1);

  int repeated = 0;
  for (int v = 1; v <= N; ++v) {
    if (pos[v].size() < 2) continue;
    if (repeated != 0)
      throw decode_error("more than one repeated value: not a single burst");
    if (static_cast<int>(pos[v].size()) > t)
      throw decode_error("value repeated more often than the burst width");
    repeated = v;
  }

  int missing_marker = -1, repeated_marker = -1;
  for (int i = 0; i <= tp; ++i) {
    if (pos[ctx.rv[i]].empty()) {
      if (missing_marker != -1)
        throw decode_error("two marker values lost: not a single burst");
      missing_marker = i;
    }
    if (static_cast<int>(pos[ctx.rv[i]].size()) >= 2) repeated_marker = i;
  }
  if (missing_marker != -1 && repeated_marker != -1)
    throw decode_error("inconsistent marker damage");

  // Assignments of marker positions to try.
  std::vector<std::vector<int>> assignments;
  std::vector<int> base(tp + 1, 0);
  for (int i = 0; i <= tp; ++i)
    if (!pos[ctx.rv[i]].empty()) base[i] = pos[ctx.rv[i]][0];
  if (missing_marker == -1 && repeated_marker == -1) {
    assignments.push_back(base);
  } else {
    const int uncertain =
        missing_marker != -1 ? missing_marker : repeated_marker;
    const int floor_value =
        missing_marker != -1 ? repeated : ctx.rv[repeated_marker];
    if (floor_value == 0 || pos[floor_value].empty())
      throw decode_error("marker value lost without a trace");
    for (int q : pos[floor_value]) {
      std::vector<int> mpos = base;
      mpos[uncertain] = q;
      assignments.push_back(mpos);
    }
  }

  std::set<Word> survivors;
  for (const auto& mpos : assignments)
    for (const Word& cand : evaluate_hypothesis(ctx, mpos)) {
      const Permutation sigma(cand);
      if (burst_consistent(encode_b(p, sigma).values(), received, t))
        survivors.insert(cand);
    }

  if (survivors.empty())
    throw decode_error("no decoding consistent with a single burst");
  if (survivors.size() > 1)
    throw decode_error("ambiguous word: several consistent decodings");
  return Permutation(*survivors.begin());
}

}  // namespace permcode
