#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "permcode/perm.hpp"

using namespace permcode;

TEST_CASE("lehmer encode matches worked examples") {
  CHECK(lehmer_encode({9, 1, 4, 2, 5, 8, 3, 6, 7}) ==
        std::vector<int>{0, 1, 1, 2, 1, 1, 4, 2, 2});
  CHECK(lehmer_encode({3, 2, 1}) == std::vector<int>{0, 1, 2});
  CHECK(lehmer_encode({1, 2, 3}) == std::vector<int>{0, 0, 0});
}

TEST_CASE("lehmer encode is defined for words with repeats") {
  CHECK(lehmer_encode({1, 2, 3, 4, 3}) == std::vector<int>{0, 0, 0, 0, 1});
  CHECK(lehmer_encode({2, 2, 1}) == std::vector<int>{0, 0, 2});
}

TEST_CASE("lehmer decode inverts encode on all small permutations") {
  for (int n = 1; n <= 6; ++n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      const Permutation p = lehmer_decode(lehmer_encode(w));
      CHECK(p.values() == w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("lehmer decode rejects invalid inversion tables") {
  CHECK_THROWS_AS(lehmer_decode({1}), malformed_error);
  CHECK_THROWS_AS(lehmer_decode({0, 2}), malformed_error);
  CHECK_THROWS_AS(lehmer_decode({0, -1}), malformed_error);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), malformed_error);
  CHECK_THROWS_AS(Permutation({1, 3}), malformed_error);
  CHECK_THROWS_AS(Permutation({0, 1}), malformed_error);
  const Permutation p({9, 1, 4, 2, 5, 8, 3, 6, 7});
  CHECK(p.inverse().values() == Word{2, 4, 7, 3, 5, 8, 9, 6, 1});
  CHECK(p.inverse().inverse() == p);
  CHECK(p.at(1) == 9);
  CHECK(p.at(9) == 7);
}

TEST_CASE("inverse word of a permutation has all entries known") {
  const InverseWord inv = inverse_word({9, 1, 4, 2, 5, 8, 3, 6, 7}, 9);
  CHECK(inv.entries == std::vector<int>{2, 4, 7, 3, 5, 8, 9, 6, 1});
  CHECK(inv.unknown_values().empty());
  CHECK(inv.absent_values().empty());
}

TEST_CASE("inverse word marks repeated values unknown") {
  // One value repeated, one value of [8] beyond range: entries over [8].
  const InverseWord inv = inverse_word({8, 1, 4, 2, 2, 7, 3, 5, 6}, 8);
  CHECK(inv.entries ==
        std::vector<int>{2, kUnknown, 7, 3, 8, 9, 6, 1});
  CHECK(inv.unknown_values() == std::vector<int>{2});
  CHECK(inv.absent_values().empty());
  CHECK(missing_positions(inv, 9) == std::vector<int>{4, 5});
}

TEST_CASE("inverse word reports absent values") {
  const InverseWord inv = inverse_word({3, 1, 3}, 3);
  CHECK(inv.entries == std::vector<int>{2, kAbsent, kUnknown});
  CHECK(inv.absent_values() == std::vector<int>{2});
  CHECK(inv.unknown_values() == std::vector<int>{3});
}

TEST_CASE("projection keeps relative order") {
  const Word w{9, 1, 4, 2, 5, 14, 10, 3, 6, 13, 11, 7, 12, 8, 15};
  // Positions of the values 1..4 in w.
  CHECK(project(w, {2, 4, 8, 3}) == std::vector<int>{1, 4, 2, 3});
  CHECK(project(w, {1, 2, 3}) == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(project(w, {1, 1}), malformed_error);
  CHECK_THROWS_AS(project(w, {0}), malformed_error);
  CHECK_THROWS_AS(project({2, 1, 2}, {1, 3}), malformed_error);
}

TEST_CASE("ascent vector starts with 1") {
  CHECK(ascent_vector({2, 4, 7, 3, 5, 8, 9, 6, 1}) ==
        std::vector<std::uint8_t>{1, 1, 1, 0, 1, 1, 1, 0, 0});
  CHECK(ascent_vector({1}) == std::vector<std::uint8_t>{1});
  CHECK_THROWS_AS(ascent_vector({1, kUnknown, 3}), malformed_error);
  CHECK_THROWS_AS(ascent_vector({kAbsent}), malformed_error);
}

TEST_CASE("factorial packing matches worked examples") {
  CHECK(factorial_pack(0, 3, 2) == std::vector<int>{1, 2});
  CHECK(factorial_pack(5, 3, 2) == std::vector<int>{3, 2});
  CHECK(falling_factorial(3, 2) == 6);
  CHECK(falling_factorial(10, 0) == 1);
  CHECK_THROWS_AS(factorial_pack(6, 3, 2), param_error);
}

TEST_CASE("factorial packing is a bijection for small alphabets") {
  for (int s = 1; s <= 6; ++s)
    for (int t = 0; t <= s; ++t) {
      const std::uint64_t total = falling_factorial(s, t);
      std::set<std::vector<int>> seen;
      for (std::uint64_t ell = 0; ell < total; ++ell) {
        const auto digits = factorial_pack(ell, s, t);
        CHECK(factorial_unpack(digits, s) == ell);
        seen.insert(digits);
      }
      CHECK(seen.size() == total);
    }
}

TEST_CASE("factorial packing orders tuples lexicographically") {
  std::vector<int> prev;
  for (std::uint64_t ell = 0; ell < falling_factorial(4, 3); ++ell) {
    const auto digits = factorial_pack(ell, 4, 3);
    if (ell > 0) CHECK(std::lexicographical_compare(prev.begin(), prev.end(),
                                                    digits.begin(),
                                                    digits.end()));
    prev = digits;
  }
}
