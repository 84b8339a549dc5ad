#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "palcomb/oracle.hpp"
#include "palcomb/pal_pairs.hpp"

using namespace palcomb;

TEST_CASE("credibility") {
  CHECK(is_credible(Word::from_letters("referee", 26)));
  CHECK(is_credible(Word()));
  CHECK_FALSE(is_credible(Word::from_string("001011")));
}

TEST_CASE("palindromic factorizations") {
  const Word aabaab = Word::from_letters("aabaab", 2);
  const auto facts = pal_factorizations(aabaab);
  REQUIRE(facts.size() == 2);
  CHECK(facts[0].left == Word::from_letters("aa", 2));
  CHECK(facts[0].right == Word::from_letters("baab", 2));
  CHECK(facts[1].left == Word::from_letters("aabaa", 2));
  CHECK(facts[1].right == Word::from_letters("b", 2));

  const auto primitive_pal = pal_factorizations(Word::from_letters("aba", 2));
  REQUIRE(primitive_pal.size() == 1);
  CHECK(primitive_pal[0].left.empty());

  const auto split = pal_factorizations(Word::from_string("0011"));
  REQUIRE(split.size() == 1);
  CHECK(split[0].left == Word::from_string("00"));
  CHECK(split[0].right == Word::from_string("11"));

  CHECK_THROWS_AS(pal_factorizations(Word()), std::invalid_argument);
}

TEST_CASE("pair parity") {
  CHECK(pair_parity(Word::from_letters("aabaab", 2)) == PairParity::both);
  CHECK(pair_parity(Word::from_string("0011")) == PairParity::even);
  CHECK(pair_parity(Word::from_string("01")) == PairParity::odd);
  CHECK(pair_parity(Word::from_string("001011")) == PairParity::none);
  CHECK(pair_parity(Word::from_string("010")) == PairParity::none);
  CHECK(pair_parity(Word()) == PairParity::none);
}

TEST_CASE("split counts") {
  CHECK(split_count(4, 2, 2) == 4);
  CHECK(split_count(4, 1, 2) == 8);
  CHECK(split_count(2, 0, 2) == 2);
  CHECK_THROWS_AS(split_count(4, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(split_count(4, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(split_count(5, 1, 2), std::invalid_argument);
}

TEST_CASE("even-primitive pair counts") {
  CHECK(count_even_prim(2, 2) == 2);
  CHECK(count_odd_prim(2, 2) == 4);
  CHECK(count_even_prim(4, 2) == 4);
  CHECK(count_odd_prim(4, 2) == 8);
  CHECK(count_odd_prim(4, 2) == 2 * count_even_prim(4, 2));
  CHECK_THROWS_AS(count_even_prim(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_odd_prim(0, 2), std::invalid_argument);
}

TEST_CASE("pair counts") {
  CHECK(count_even_pairs(0, 2) == 1);
  CHECK(count_odd_pairs(0, 2) == 0);
  CHECK(count_even_pairs(1, 2) == 0);
  CHECK(count_even_pairs(2, 2) == 2);
  CHECK(count_odd_pairs(2, 2) == 4);
  CHECK(count_even_pairs(4, 2) == 6);
  CHECK(count_odd_pairs(4, 2) == 12);
}

TEST_CASE("odd pairs are k times even pairs") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 20; ++n) {
      REQUIRE(count_odd_pairs(n, k) ==
              static_cast<u128>(k) * count_even_pairs(n, k));
    }
  }
}

TEST_CASE("unary alphabet pair counts") {
  for (int n = 2; n <= 12; n += 2) {
    CHECK(count_even_pairs(n, 1) == 1);
    CHECK(count_odd_pairs(n, 1) == 1);
  }
}

TEST_CASE("pal pair census") {
  CHECK(count_pal_pairs(0, 2) == 1);
  CHECK(count_pal_pairs(1, 2) == 2);
  CHECK(count_pal_pairs(2, 2) == 4);
  for (int n = 0; n <= 12; ++n) {
    REQUIRE(count_pal_pairs(n, 2) == oracle::brute_count("credible", n, 2));
  }
  for (int n = 0; n <= 8; ++n) {
    REQUIRE(count_pal_pairs(n, 3) == oracle::brute_count("credible", n, 3));
  }
  CHECK_THROWS_AS(count_pal_pairs(40, 2), std::length_error);
}
