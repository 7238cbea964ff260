#include "permcode/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permcode/rng.hpp"

namespace permcode {
namespace {

constexpr std::size_t kMaxFailureExamples = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string scope_desc(const VerifyScope& scope) {
  std::ostringstream os;
  if (scope.exhaustive)
    os << "exhaustive";
  else
    os << "sampled(" << scope.samples << ", seed=" << scope.seed << ")";
  return os.str();
}

void add_failure(VerificationReport& report, Word sigma,
                 std::optional<ErrorPattern> pattern, Word decoded,
                 std::string note) {
  ++report.failure_count;
  if (report.failures.size() < kMaxFailureExamples) {
    report.failures.push_back({std::move(sigma), std::move(pattern),
                               std::move(decoded), std::move(note)});
  }
}

// Runs fn on every data word in scope. Sampled trials draw from
// (seed, trial index) so results do not depend on evaluation order.
template <typename Fn>
void for_each_word(int n, const VerifyScope& scope, Fn&& fn) {
  if (scope.exhaustive) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return;
  }
  for (long long trial = 0; trial < scope.samples; ++trial) {
    auto rng = seeded_rng(scope.seed, static_cast<std::uint64_t>(trial));
    fn(random_permutation(rng, n));
  }
}

// Every subset of `eligible` with at most t elements, empty subset included.
template <typename Fn>
void for_each_subset(const std::vector<int>& eligible, int t, Fn&& fn) {
  std::vector<int> picked;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    fn(picked);
    if (static_cast<int>(picked.size()) == t) return;
    for (std::size_t i = from; i < eligible.size(); ++i) {
      picked.push_back(eligible[i]);
      self(self, i + 1);
      picked.pop_back();
    }
  };
  rec(rec, 0);
}

template <typename Fn>
void for_each_burst(int len, int t, Fn&& fn) {
  for (int t1 = 1; t1 <= t; ++t1)
    for (int j = 1; j + t1 - 1 <= len; ++j) fn(PatternB{j, t1, 0});
}

template <typename Fn>
void for_each_drop(const Word& w, int t, Fn&& fn) {
  const int len = static_cast<int>(w.size());
  for (int i1 = 1; i1 <= len; ++i1)
    for (int t1 = 1; t1 <= t && w[i1 - 1] - t1 >= 1; ++t1)
      fn(PatternC{i1, t1, 0});
}

void run_trial(VerificationReport& report, const Word& data,
               const ErrorPattern& pattern, const Word& corrupted,
               const CodeParamsA* pa, const CodeParamsB* pb,
               const CodeParamsC* pc) {
  ++report.cases_tested;
  try {
    Word out;
    if (pa) out = decode_a(*pa, corrupted).values();
    if (pb) out = decode_b(*pb, corrupted).values();
    if (pc) out = decode_c(*pc, corrupted).values();
    if (out != data)
      add_failure(report, data, pattern, out, "decoded to a different word");
  } catch (const std::exception& e) {
    add_failure(report, data, pattern, {}, e.what());
  }
}

}  // namespace

VerifyScope VerifyScope::exhaustive_words() {
  VerifyScope s;
  s.exhaustive = true;
  return s;
}

VerifyScope VerifyScope::sampled(long long samples, std::uint64_t seed) {
  VerifyScope s;
  s.samples = samples;
  s.seed = seed;
  return s;
}

VerificationReport exhaustive_verify(const CodeParamsA& params,
                                     const VerifyScope& scope) {
  const auto start = Clock::now();
  VerificationReport report;
  {
    std::ostringstream os;
    os << "verify A n=" << params.n << " t=" << params.t << " m=" << params.m
       << " " << scope_desc(scope);
    report.params = os.str();
  }
  const int m_eff = params.m + params.t_prime + 1;
  for_each_word(params.n, scope, [&](const Word& data) {
    const Word cw = encode_a(params, Permutation(data)).values();
    std::vector<int> eligible;
    for (int p = 1; p <= static_cast<int>(cw.size()); ++p)
      if (cw[p - 1] > m_eff) eligible.push_back(p);
    for_each_subset(eligible, params.t, [&](const std::vector<int>& positions) {
      const PatternA pat{positions, m_eff};
      run_trial(report, data, pat, inject_a(cw, pat), &params, nullptr,
                nullptr);
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport exhaustive_verify(const CodeParamsB& params,
                                     const VerifyScope& scope) {
  const auto start = Clock::now();
  VerificationReport report;
  {
    std::ostringstream os;
    os << "verify B n=" << params.n << " t=" << params.t << " "
       << scope_desc(scope);
    report.params = os.str();
  }
  for_each_word(params.n, scope, [&](const Word& data) {
    const Word cw = encode_b(params, Permutation(data)).values();
    for_each_burst(static_cast<int>(cw.size()), params.t,
                   [&](const PatternB& pat) {
                     run_trial(report, data, pat, inject_b(cw, pat), nullptr,
                               &params, nullptr);
                   });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport exhaustive_verify(const CodeParamsC& params,
                                     const VerifyScope& scope) {
  const auto start = Clock::now();
  VerificationReport report;
  {
    std::ostringstream os;
    os << "verify C n=" << params.n << " t=" << params.t << " "
       << scope_desc(scope);
    report.params = os.str();
  }
  for_each_word(params.n, scope, [&](const Word& data) {
    const Word cw = encode_c(params, Permutation(data)).values();
    ++report.cases_tested;
    try {
      const Word out = decode_c(params, cw).values();
      if (out != data)
        add_failure(report, data, std::nullopt, out,
                    "clean word decoded to a different word");
    } catch (const std::exception& e) {
      add_failure(report, data, std::nullopt, {}, e.what());
    }
    for_each_drop(cw, params.t, [&](const PatternC& pat) {
      run_trial(report, data, pat, inject_c(cw, pat), nullptr, nullptr,
                &params);
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

namespace {

template <typename EncodeFn, typename PatternsFn>
VerificationReport scan_impl(std::string desc, int n, const VerifyScope& scope,
                             EncodeFn&& encode_fn, PatternsFn&& for_patterns) {
  const auto start = Clock::now();
  VerificationReport report;
  report.params = std::move(desc);
  std::map<Word, Word> seen;  // corrupted word -> first data word reaching it
  for_each_word(n, scope, [&](const Word& data) {
    const Word cw = encode_fn(data);
    for_patterns(cw, [&](const ErrorPattern& pat, const Word& corrupted) {
      ++report.cases_tested;
      const auto [it, inserted] = seen.emplace(corrupted, data);
      if (!inserted && it->second != data)
        add_failure(report, data, pat, it->second,
                    "corrupted word also reachable from the recorded word");
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

VerificationReport ambiguity_scan(const CodeParamsA& params,
                                  const VerifyScope& scope) {
  std::ostringstream os;
  os << "ambiguity A n=" << params.n << " t=" << params.t
     << " m=" << params.m << " " << scope_desc(scope);
  const int m_eff = params.m + params.t_prime + 1;
  return scan_impl(
      os.str(), params.n, scope,
      [&](const Word& data) {
        return encode_a(params, Permutation(data)).values();
      },
      [&](const Word& cw, auto&& emit) {
        std::vector<int> eligible;
        for (int p = 1; p <= static_cast<int>(cw.size()); ++p)
          if (cw[p - 1] > m_eff) eligible.push_back(p);
        for_each_subset(eligible, params.t,
                        [&](const std::vector<int>& positions) {
                          const PatternA pat{positions, m_eff};
                          emit(ErrorPattern(pat), inject_a(cw, pat));
                        });
      });
}

VerificationReport ambiguity_scan(const CodeParamsB& params,
                                  const VerifyScope& scope) {
  std::ostringstream os;
  os << "ambiguity B n=" << params.n << " t=" << params.t << " "
     << scope_desc(scope);
  return scan_impl(
      os.str(), params.n, scope,
      [&](const Word& data) {
        return encode_b(params, Permutation(data)).values();
      },
      [&](const Word& cw, auto&& emit) {
        for_each_burst(static_cast<int>(cw.size()), params.t,
                       [&](const PatternB& pat) {
                         emit(ErrorPattern(pat), inject_b(cw, pat));
                       });
      });
}

VerificationReport ambiguity_scan(const CodeParamsC& params,
                                  const VerifyScope& scope) {
  std::ostringstream os;
  os << "ambiguity C n=" << params.n << " t=" << params.t << " "
     << scope_desc(scope);
  return scan_impl(
      os.str(), params.n, scope,
      [&](const Word& data) {
        return encode_c(params, Permutation(data)).values();
      },
      [&](const Word& cw, auto&& emit) {
        for_each_drop(cw, params.t, [&](const PatternC& pat) {
          emit(ErrorPattern(pat), inject_c(cw, pat));
        });
      });
}

const char* lemma_name(Lemma id) {
  switch (id) {
    case Lemma::L1: return "L1";
    case Lemma::L2: return "L2";
    case Lemma::L3: return "L3";
    case Lemma::L4: return "L4";
    case Lemma::L6: return "L6";
    case Lemma::L7: return "L7";
    case Lemma::P1: return "P1";
    case Lemma::P2: return "P2";
  }
  return "?";
}

std::optional<Lemma> lemma_from_name(const std::string& name) {
  std::string key = name;
  for (char& c : key) c = static_cast<char>(std::toupper(c));
  static const std::pair<const char*, Lemma> table[] = {
      {"L1", Lemma::L1}, {"L2", Lemma::L2}, {"L3", Lemma::L3},
      {"L4", Lemma::L4}, {"L6", Lemma::L6}, {"L7", Lemma::L7},
      {"P1", Lemma::P1}, {"P2", Lemma::P2}};
  for (const auto& [label, id] : table)
    if (key == label) return id;
  return std::nullopt;
}

namespace {

VerificationReport make_report(Lemma id, int n, int t,
                               const VerifyScope& scope) {
  VerificationReport report;
  std::ostringstream os;
  os << lemma_name(id) << " n=" << n << " t=" << t << " " << scope_desc(scope);
  report.params = os.str();
  return report;
}

bool values_separated(const Word& sigma, const std::vector<int>& positions) {
  std::vector<int> values;
  for (int p : positions) values.push_back(sigma[p - 1]);
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] < 2) return false;
  return true;
}

// One stuck position drops the left-inversion count by one at the original
// holder of the next-lower value when that holder sits later in the word;
// every other count is unchanged.
VerificationReport run_l1(int n, int t, const VerifyScope& scope) {
  auto report = make_report(Lemma::L1, n, t, scope);
  const auto start = Clock::now();
  for_each_word(n, scope, [&](const Word& sigma) {
    const std::vector<int> lehmer = lehmer_encode(sigma);
    std::vector<int> eligible;
    for (int p = 1; p <= n; ++p)
      if (sigma[p - 1] >= 2) eligible.push_back(p);
    for_each_subset(eligible, t, [&](const std::vector<int>& positions) {
      if (!values_separated(sigma, positions)) return;
      const PatternA pat{positions, 0};
      ++report.cases_tested;
      std::vector<int> expected = lehmer;
      for (int p : positions) {
        const int holder =
            static_cast<int>(std::find(sigma.begin(), sigma.end(),
                                       sigma[p - 1] - 1) -
                             sigma.begin()) +
            1;
        if (holder > p) --expected[holder - 1];
      }
      const Word corrupted = inject_a(sigma, pat);
      const std::vector<int> actual = lehmer_encode(corrupted);
      if (actual != expected)
        add_failure(report, sigma, ErrorPattern(pat), corrupted,
                    "inversion counts changed away from the pair law");
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Shape of the chain-repair estimate versus the original word: changes only
// at stuck positions, each a single downward step landing on a repeated value
// whose other copy is the innocent original holder.
std::optional<std::string> estimate_shape_violation(
    const Word& sigma, const Word& sigma_hat, const std::vector<int>& stuck) {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::vector<int>> pos(n + 1);
  for (int p = 1; p <= n; ++p) {
    const int v = sigma_hat[p - 1];
    if (v < 1 || v > n) return "estimated value out of range";
    pos[v].push_back(p);
  }
  std::vector<int> repeated;
  for (int v = 1; v <= n; ++v) {
    if (pos[v].size() > 2) return "value repeated more than twice";
    if (pos[v].size() == 2) repeated.push_back(v);
  }
  int changed = 0;
  for (int p = 1; p <= n; ++p) {
    if (sigma_hat[p - 1] == sigma[p - 1]) continue;
    ++changed;
    if (sigma_hat[p - 1] != sigma[p - 1] - 1)
      return "changed entry is not a single downward step";
    if (std::find(stuck.begin(), stuck.end(), p) == stuck.end())
      return "entry changed outside the stuck set";
    if (pos[sigma_hat[p - 1]].size() != 2)
      return "changed entry is not part of a repeated pair";
  }
  if (changed != static_cast<int>(repeated.size()))
    return "repeated pair count differs from changed entries";
  for (int r : repeated) {
    const int p = pos[r][0];
    const int q = pos[r][1];
    const bool ordered = sigma[p - 1] == r && sigma[q - 1] == r + 1;
    const bool swapped = sigma[q - 1] == r && sigma[p - 1] == r + 1;
    if (!ordered && !swapped)
      return "repeated pair does not bind the value to its successor";
  }
  return std::nullopt;
}

VerificationReport run_l2(int n, int t, const VerifyScope& scope) {
  auto report = make_report(Lemma::L2, n, t, scope);
  const auto start = Clock::now();
  for_each_word(n, scope, [&](const Word& sigma) {
    std::vector<int> eligible;
    for (int p = 1; p <= n; ++p)
      if (sigma[p - 1] >= 2) eligible.push_back(p);
    for_each_subset(eligible, t, [&](const std::vector<int>& positions) {
      const PatternA pat{positions, 0};
      ++report.cases_tested;
      try {
        const Word sigma_hat = estimate_sigma_hat(inject_a(sigma, pat));
        if (const auto bad =
                estimate_shape_violation(sigma, sigma_hat, positions))
          add_failure(report, sigma, ErrorPattern(pat), sigma_hat, *bad);
      } catch (const std::exception& e) {
        add_failure(report, sigma, ErrorPattern(pat), {}, e.what());
      }
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Independent block-flag count: a block is flagged when one of its values is
// missing from the word. Side 1 blocks cover values 2t(i-1)+1 .. 2ti; side 2
// shifts the grid by t and leaves values 1..t uncovered.
int flagged_blocks(const Word& w, int n, int t, int side) {
  std::vector<char> present(n + 1, 0);
  for (int v : w)
    if (1 <= v && v <= n) present[v] = 1;
  int flagged = 0;
  for (int lo = side == 1 ? 1 : t + 1; lo <= n; lo += 2 * t) {
    const int hi = std::min(lo + 2 * t - 1, n);
    for (int v = lo; v <= hi; ++v) {
      if (!present[v]) {
        ++flagged;
        break;
      }
    }
  }
  return flagged;
}

VerificationReport run_l3(int n, int t, const VerifyScope& scope) {
  auto report = make_report(Lemma::L3, n, t, scope);
  const auto start = Clock::now();
  for_each_word(n, scope, [&](const Word& sigma) {
    for_each_burst(n, t, [&](const PatternB& pat) {
      ++report.cases_tested;
      const Word w = inject_b(sigma, pat);
      const int f1 = flagged_blocks(w, n, t, 1);
      const int f2 = flagged_blocks(w, n, t, 2);
      if (std::min(f1, f2) > 1)
        add_failure(report, sigma, ErrorPattern(pat), w,
                    "both block decompositions flag more than one erasure");
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Marker placement law for the burst code: when a burst disturbs one marker
// value, the true placement is the only candidate whose digit sum satisfies
// the mod-n checksum.
std::optional<std::string> placement_violation(const CodeParamsB& params,
                                               const Word& cw,
                                               const Word& rec) {
  const int len = static_cast<int>(cw.size());
  const std::vector<int> rv = params.redundancy_values();
  std::vector<std::vector<int>> pos(len + 1);
  for (int p = 1; p <= len; ++p) pos[rec[p - 1]].push_back(p);

  const auto checksum_ok = [&](const std::vector<int>& marker_pos) {
    std::vector<char> is_marker(len + 1, 0);
    for (int p : marker_pos) is_marker[p] = 1;
    long long sum = 0;
    for (int p : marker_pos)
      for (int q = 1; q < p; ++q)
        if (!is_marker[q]) ++sum;
    return sum % params.n == 0;
  };

  std::vector<int> damaged;
  for (int v : rv)
    if (pos[v].size() != 1) damaged.push_back(v);

  if (damaged.empty()) {
    std::vector<int> marker_pos;
    for (int v : rv) marker_pos.push_back(pos[v][0]);
    if (!checksum_ok(marker_pos))
      return "undamaged markers fail the checksum";
    return std::nullopt;
  }
  if (damaged.size() > 1) return "more than one disturbed redundancy value";

  // The disturbed marker hides among the copies of the unique repeated value
  // (the burst floor).
  std::vector<int> dup_values;
  for (int v = 1; v <= len; ++v)
    if (pos[v].size() >= 2) dup_values.push_back(v);
  if (dup_values.size() != 1)
    return "disturbed marker without a unique repeated value";
  const std::vector<int>& candidates = pos[dup_values[0]];
  if (static_cast<int>(candidates.size()) > params.t + 1)
    return "more than t+1 candidate placements";

  const int true_pos =
      static_cast<int>(std::find(cw.begin(), cw.end(), damaged[0]) -
                       cw.begin()) +
      1;
  int winners = 0;
  int winner = 0;
  for (int cand : candidates) {
    std::vector<int> marker_pos;
    for (int v : rv)
      marker_pos.push_back(v == damaged[0] ? cand : pos[v][0]);
    if (checksum_ok(marker_pos)) {
      ++winners;
      winner = cand;
    }
  }
  if (winners != 1)
    return std::to_string(winners) + " placements satisfy the checksum";
  if (winner != true_pos) return "checksum selects the wrong placement";
  return std::nullopt;
}

VerificationReport run_l4(int n, int t, const VerifyScope& scope) {
  const CodeParamsB params = CodeParamsB::create(n, t);
  auto report = make_report(Lemma::L4, n, t, scope);
  const auto start = Clock::now();
  for_each_word(n, scope, [&](const Word& data) {
    const Word cw = encode_b(params, Permutation(data)).values();
    for_each_burst(static_cast<int>(cw.size()), t, [&](const PatternB& pat) {
      ++report.cases_tested;
      const Word rec = inject_b(cw, pat);
      if (const auto bad = placement_violation(params, cw, rec))
        add_failure(report, data, ErrorPattern(pat), rec, *bad);
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Reconstruction uniqueness for the drop channel: among all candidate
// inverse words, exactly one carries the parity state of the true inverse,
// and it is the true inverse.
VerificationReport run_l6(int n, int t, const VerifyScope& scope) {
  auto report = make_report(Lemma::L6, n, t, scope);
  const auto start = Clock::now();
  for_each_word(n, scope, [&](const Word& sigma) {
    const Word inv_true = Permutation(sigma).inverse().values();
    const ParityChecks target = parity_checks(inv_true, t);
    for_each_drop(sigma, t, [&](const PatternC& pat) {
      ++report.cases_tested;
      const Word w = inject_c(sigma, pat);
      try {
        const auto cands = candidate_reconstructions(inverse_word(w, n - 1), t);
        if (std::find(cands.begin(), cands.end(), inv_true) == cands.end()) {
          add_failure(report, sigma, ErrorPattern(pat), w,
                      "true inverse not among the candidates");
          return;
        }
        int hits = 0;
        Word other;
        for (const auto& cand : cands) {
          if (parity_checks(cand, t) == target) {
            ++hits;
            if (cand != inv_true) other = cand;
          }
        }
        if (hits != 1)
          add_failure(report, sigma, ErrorPattern(pat), other,
                      std::to_string(hits) +
                          " candidates share the parity state");
      } catch (const std::exception& e) {
        add_failure(report, sigma, ErrorPattern(pat), {}, e.what());
      }
    });
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Checksum slot law: sweeping the insertion slot over a word with t marker
// values above n, the position functional steps by 0 or 1, hits every
// residue, and the chosen slot leaves the marker position sum divisible by
// n+1.
VerificationReport run_l7(int n, int t, const VerifyScope& scope) {
  auto report = make_report(Lemma::L7, n, t, scope);
  const auto start = Clock::now();
  const int len = n + t;
  const int mod = n + 1;
  for_each_word(len, scope, [&](const Word& w) {
    ++report.cases_tested;
    std::vector<int> markers;
    for (int p = 1; p <= len; ++p)
      if (w[p - 1] > n) markers.push_back(p);
    std::vector<long long> sweep(len + 2, 0);
    for (int p = 1; p <= len + 1; ++p) {
      long long s = p;
      for (int q : markers) s += q + (q >= p ? 1 : 0);
      sweep[p] = s;
    }
    std::string bad;
    for (int p = 1; p <= len && bad.empty(); ++p) {
      const long long step = sweep[p + 1] - sweep[p];
      if (step != 0 && step != 1) bad = "sweep step outside {0,1}";
    }
    int slot = 0;
    for (int p = 1; p <= len + 1 && slot == 0; ++p)
      if (sweep[p] % mod == 0) slot = p;
    if (bad.empty() && slot == 0) bad = "no slot reaches the zero residue";
    if (bad.empty()) {
      Word out = w;
      out.insert(out.begin() + (slot - 1), n + t + 1);
      long long total = 0;
      for (int p = 1; p <= static_cast<int>(out.size()); ++p)
        if (out[p - 1] > n) total += p;
      if (total % mod != 0) bad = "inserted marker positions miss the congruence";
    }
    if (!bad.empty()) add_failure(report, w, std::nullopt, {}, bad);
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Locality of the ascent vector under one symbol edit: a deletion removes one
// bit at the edit index or its successor; a substitution either swaps an
// adjacent (1,0)/(0,1) pair, flips one of the two local bits, or changes
// nothing.
VerificationReport run_p1(int n, const VerifyScope& scope) {
  auto report = make_report(Lemma::P1, n, 0, scope);
  const auto start = Clock::now();
  for_each_word(n, scope, [&](const Word& w) {
    const auto b = ascent_vector(w);
    const auto erased = [&](int k) {
      auto e = b;
      e.erase(e.begin() + (k - 1));
      return e;
    };
    for (int i = 1; i <= n; ++i) {
      {
        ++report.cases_tested;
        Word d = w;
        d.erase(d.begin() + (i - 1));
        const auto bd = ascent_vector(d);
        bool ok = bd == erased(i);
        if (!ok && i + 1 <= n) ok = bd == erased(i + 1);
        if (!ok)
          add_failure(report, w, std::nullopt, d,
                      "deletion does not remove one local ascent bit");
      }
      for (int v = 1; v <= n; ++v) {
        if (v == w[i - 1]) continue;
        ++report.cases_tested;
        Word s = w;
        s[i - 1] = v;
        const auto bs = ascent_vector(s);
        std::vector<int> diffs;
        for (int k = 1; k <= n; ++k)
          if (bs[k - 1] != b[k - 1]) diffs.push_back(k);
        bool ok = false;
        if (diffs.empty())
          ok = true;
        else if (diffs.size() == 1)
          ok = diffs[0] == i || diffs[0] == i + 1;
        else if (diffs.size() == 2)
          ok = diffs[0] == i && diffs[1] == i + 1 && b[i - 1] != b[i];
        if (!ok)
          add_failure(report, w, std::nullopt, s,
                      "substitution changes ascents beyond the local cases");
      }
    }
  });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// Factorial packing is an order-preserving bijection onto t-tuples of
// distinct values from [s].
VerificationReport run_p2(int s, int t, const VerifyScope& scope) {
  auto report = make_report(Lemma::P2, s, t, scope);
  const auto start = Clock::now();
  const std::uint64_t total = falling_factorial(s, t);
  std::vector<int> prev;
  for (std::uint64_t ell = 0; ell < total; ++ell) {
    ++report.cases_tested;
    const std::vector<int> digits = factorial_pack(ell, s, t);
    std::string bad;
    if (static_cast<int>(digits.size()) != t) {
      bad = "wrong digit count";
    } else {
      std::vector<char> used(s + 1, 0);
      for (int d : digits) {
        if (d < 1 || d > s) {
          bad = "digit out of range";
          break;
        }
        if (used[d]) {
          bad = "digit repeated";
          break;
        }
        used[d] = 1;
      }
    }
    if (bad.empty() && factorial_unpack(digits, s) != ell)
      bad = "unpack does not invert pack";
    if (bad.empty() && ell > 0 && !(prev < digits))
      bad = "packing is not lexicographically increasing";
    if (!bad.empty()) add_failure(report, digits, std::nullopt, {}, bad);
    prev = digits;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

VerificationReport lemma_suite(Lemma id, int n, int t,
                               const VerifyScope& scope) {
  switch (id) {
    case Lemma::L1: return run_l1(n, t, scope);
    case Lemma::L2: return run_l2(n, t, scope);
    case Lemma::L3: return run_l3(n, t, scope);
    case Lemma::L4: return run_l4(n, t, scope);
    case Lemma::L6: return run_l6(n, t, scope);
    case Lemma::L7: return run_l7(n, t, scope);
    case Lemma::P1: return run_p1(n, scope);
    case Lemma::P2: return run_p2(n, t, scope);
  }
  throw param_error("unknown lemma id");
}

}  // namespace permcode
