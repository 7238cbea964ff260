#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "permcode/channel.hpp"
#include "permcode/code_c.hpp"
#include "permcode/rng.hpp"

using namespace permcode;

namespace {
// Running example permutation and its inverse.
const Word kSigma{9, 1, 4, 2, 5, 8, 3, 6, 7};
const Word kSigmaInv{2, 4, 7, 3, 5, 8, 9, 6, 1};
}  // namespace

TEST_CASE("parameter derivation") {
  const CodeParamsC p13 = CodeParamsC::create(13, 1);
  CHECK(p13.t_prime == 2);
  CHECK(p13.codeword_length() == 16);
  CHECK(p13.parity_states() == 18);

  CHECK(CodeParamsC::create(14, 1).t_prime == 2);

  const CodeParamsC p14 = CodeParamsC::create(14, 2);
  CHECK(p14.t_prime == 3);
  CHECK(p14.codeword_length() == 18);
  CHECK(p14.parity_states() == 160);

  CHECK(CodeParamsC::create(15, 2).t_prime == 3);

  const CodeParamsC p15 = CodeParamsC::create(15, 3);
  CHECK(p15.t_prime == 3);
  CHECK(p15.parity_states() == 630);

  // 2(t+2)(2t+1)t^2 = 18 exactly matches the 18 positions left at n = 23.
  CHECK(CodeParamsC::create(23, 1).t_prime == 1);
}

TEST_CASE("invalid parameters rejected") {
  CHECK_THROWS_WITH_AS(CodeParamsC::create(13, 2), doctest::Contains("t+12"),
                       param_error);
  CHECK_THROWS_AS(CodeParamsC::create(12, 1), param_error);
  CHECK_THROWS_AS(CodeParamsC::create(14, 3), param_error);
  CHECK_THROWS_AS(CodeParamsC::create(13, 0), param_error);
}

TEST_CASE("parity checks match the worked example") {
  // Ascent vector of the inverse is (1,1,1,0,1,1,1,0,0): six ascents, so the
  // first parity is even. Weighted sums: 24 mod 5 = 4, 74 mod 9 = 2, and the
  // Lehmer total 14 mod 7 = 0.
  CHECK(parity_checks(kSigmaInv, 3) == ParityChecks{0, 4, 2, 0});
}

TEST_CASE("parity checks on identity and reversal") {
  for (int n : {8, 13})
    for (int t : {1, 2, 3}) {
      Word id(n), rev(n);
      for (int i = 0; i < n; ++i) {
        id[i] = i + 1;
        rev[i] = n - i;
      }
      const ParityChecks pi = parity_checks(id, t);
      CHECK(pi.p1 == n % 2);
      CHECK(pi.p2 == n * (n + 1) / 2 % (t + 2));
      CHECK(pi.p3 == n * (n + 1) * (n + 2) / 6 % (t * t));
      CHECK(pi.p4 == 0);
      const ParityChecks pr = parity_checks(rev, t);
      CHECK(pr.p1 == 1);
      CHECK(pr.p2 == 1);
      CHECK(pr.p3 == 1 % (t * t));
      CHECK(pr.p4 == n * (n - 1) / 2 % (2 * t + 1));
    }
}

TEST_CASE("parity packing is a bijection") {
  for (int t : {1, 2, 3}) {
    const std::uint64_t states = 2ull * (t + 2) * (2 * t + 1) * t * t;
    for (std::uint64_t ell = 0; ell < states; ++ell) {
      const ParityChecks p = unpack_parities(ell, t);
      CHECK(p.p1 < 2);
      CHECK(p.p2 < t + 2);
      CHECK(p.p3 < t * t);
      CHECK(p.p4 < 2 * t + 1);
      CHECK(pack_parities(p, t) == ell);
    }
    CHECK_THROWS_AS(unpack_parities(states, t), param_error);
  }
}

TEST_CASE("candidate reconstructions enumerate the worked example") {
  // Dropping the symbol at position 5 by 3 turns the running example into
  // (8,1,4,2,2,7,3,5,6): value 2 repeats, positions 4 and 5 are open.
  const Word corrupted{8, 1, 4, 2, 2, 7, 3, 5, 6};
  const InverseWord inv = inverse_word(corrupted, 8);

  const auto cands = candidate_reconstructions(inv, 3);
  CHECK(cands.size() == 6);
  CHECK(std::set<Word>(cands.begin(), cands.end()).size() == 6);
  CHECK(std::count(cands.begin(), cands.end(), kSigmaInv) == 1);

  CHECK(candidate_reconstructions(inv, 1).size() == 2);
}

TEST_CASE("candidate reconstructions clamp the drop near the top value") {
  // Value 8 repeats; the dropped symbol can only have been 9, so each open
  // position yields exactly one completion.
  const Word corrupted{8, 1, 4, 2, 8, 7, 3, 5, 6};
  const auto cands = candidate_reconstructions(inverse_word(corrupted, 8), 3);
  REQUIRE(cands.size() == 2);
  CHECK(cands[0] == Word{2, 4, 7, 3, 8, 9, 6, 1, 5});
  CHECK(cands[1] == Word{2, 4, 7, 3, 8, 9, 6, 5, 1});
}

TEST_CASE("candidate reconstructions validate their input") {
  CHECK(candidate_reconstructions(inverse_word({2, 1, 3}, 3), 2) ==
        std::vector<Word>{{2, 1, 3}});
  CHECK_THROWS_AS(
      candidate_reconstructions(inverse_word({1, 1, 2, 2, 3}, 3), 2),
      malformed_error);
  CHECK_THROWS_AS(candidate_reconstructions(inverse_word({1, 3, 3}, 3), 2),
                  malformed_error);
}

TEST_CASE("single stuck drop predicate") {
  const Word base{5, 2, 4, 1, 3};
  CHECK(is_single_stuck_drop(base, base, 1));
  CHECK(is_single_stuck_drop(base, {3, 2, 4, 1, 3}, 2));   // 5 dropped by 2
  CHECK_FALSE(is_single_stuck_drop(base, {3, 2, 4, 1, 3}, 1));
  CHECK(is_single_stuck_drop(base, {4, 1, 3, 1, 2}, 1));   // 2 dropped by 1
  CHECK_FALSE(is_single_stuck_drop(base, {3, 2, 4, 1, 2}, 3));
  CHECK_FALSE(is_single_stuck_drop(base, {5, 2, 4, 1}, 3));
  CHECK_FALSE(is_single_stuck_drop(base, {5, 2, 5, 1, 3}, 3));

  // Exhaustive against the channel for n = 5.
  Word perm{1, 2, 3, 4, 5};
  do {
    for (int i1 = 1; i1 <= 5; ++i1)
      for (int t1 = 1; t1 <= 2; ++t1) {
        if (perm[i1 - 1] - t1 < 1) continue;
        const Word hit = inject_c(perm, PatternC{i1, t1, 0});
        CHECK(is_single_stuck_drop(perm, hit, 2));
        if (t1 == 2) CHECK_FALSE(is_single_stuck_drop(perm, hit, 1));
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("encode layout regression") {
  // Identity data at n=13, t=1: parities (1,1,0,0) pack to rank 12, giving
  // digits (2,7), so markers 14 and 15 enter at positions 7 and 12 and the
  // sweep parks 16 at position 7 (marker positions 7+8+13 = 28 = 2*14).
  const CodeParamsC params = CodeParamsC::create(13, 1);
  const Permutation cw = encode_c(params, Permutation::identity(13));
  CHECK(cw.values() == Word{1, 2, 3, 4, 5, 6, 16, 14, 7, 8, 9, 10, 15, 11, 12,
                            13});
}

TEST_CASE("encode keeps data order and balances marker positions") {
  for (auto [n, t] : {std::pair{13, 1}, {14, 2}, {15, 3}, {23, 1}}) {
    const CodeParamsC params = CodeParamsC::create(n, t);
    for (int s = 0; s < 25; ++s) {
      auto rng = seeded_rng(11, 100 * n + s);
      const Permutation sigma{random_permutation(rng, n)};
      const Permutation cw = encode_c(params, sigma);
      CHECK(cw.size() == params.codeword_length());
      Word data;
      long long marker_total = 0;
      for (int pos = 1; pos <= cw.size(); ++pos) {
        if (cw.at(pos) <= n)
          data.push_back(cw.at(pos));
        else
          marker_total += pos;
      }
      CHECK(data == sigma.values());
      CHECK(marker_total % (n + 1) == 0);
      CHECK(decode_c(params, cw.values()) == sigma);
    }
  }
}

TEST_CASE("round trips under every admissible drop") {
  for (auto [n, t] : {std::pair{13, 1}, {14, 1}, {14, 2}, {23, 1}}) {
    const CodeParamsC params = CodeParamsC::create(n, t);
    const int len = params.codeword_length();
    for (int s = 0; s < 120; ++s) {
      auto rng = seeded_rng(23, 1000 * n + 10 * t + s);
      const Permutation sigma{random_permutation(rng, n)};
      const Permutation cw = encode_c(params, sigma);
      for (int i1 = 1; i1 <= len; ++i1)
        for (int t1 = 1; t1 <= t; ++t1) {
          if (cw.at(i1) - t1 < 1) continue;
          const Word rec = inject_c(cw.values(), PatternC{i1, t1, 0});
          CHECK(decode_c(params, rec) == sigma);
        }
    }
  }
}

TEST_CASE("known ambiguous word at t=3 is reported, not guessed") {
  // At t=3 the four parity moduli are too coarse: two reconstruction
  // candidates can share the full parity vector, and then two valid
  // codewords sit one admissible drop from the same received word. This
  // instance is kept as a regression of that boundary; t <= 2 has no known
  // ambiguity (see the sampled round-trip suites).
  const CodeParamsC params = CodeParamsC::create(16, 3);
  const Permutation sigma{
      Word{12, 16, 13, 1, 4, 10, 7, 8, 11, 5, 14, 6, 3, 15, 2, 9}};
  const Word rec =
      inject_c(encode_c(params, sigma).values(), PatternC{3, 2, 0});
  CHECK_THROWS_WITH_AS(decode_c(params, rec), doctest::Contains("ambiguous"),
                       decode_error);
}

TEST_CASE("decode rejects malformed words") {
  const CodeParamsC params = CodeParamsC::create(13, 1);
  const Permutation sigma{Word{7, 12, 1, 9, 4, 11, 2, 8, 5, 10, 3, 6, 13}};
  const Word cw = encode_c(params, sigma).values();

  CHECK_THROWS_AS(decode_c(params, Word(cw.begin(), cw.end() - 1)),
                  decode_error);

  Word oob = cw;
  oob[0] = 17;
  CHECK_THROWS_AS(decode_c(params, oob), decode_error);

  Word triple = cw;
  triple[0] = triple[1] = triple[2] = 5;
  CHECK_THROWS_WITH_AS(decode_c(params, triple),
                       doctest::Contains("more than twice"), decode_error);

  // Two distinct values repeated cannot come from one drop.
  Word double_dup = cw;
  for (int& v : double_dup)
    if (v == 2) v = 1;
  for (int& v : double_dup)
    if (v == 4) v = 3;
  CHECK_THROWS_AS(decode_c(params, double_dup), decode_error);

  // A permutation of the full range that was never a codeword.
  Word id16(16);
  for (int i = 0; i < 16; ++i) id16[i] = i + 1;
  CHECK_THROWS_WITH_AS(decode_c(params, id16), doctest::Contains("checksum"),
                       decode_error);
}
