#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "palcomb/oracle.hpp"
#include "palcomb/word.hpp"

using namespace palcomb;

TEST_CASE("reverse") {
  CHECK(reverse(Word::from_letters("stressed", 26)) ==
        Word::from_letters("desserts", 26));
  CHECK(reverse(Word()) == Word());
  const Word aba = Word::from_letters("aba", 2);
  CHECK(reverse(aba) == aba);
}

TEST_CASE("reverse is an involution (exhaustive, k <= 3)") {
  for (int k = 2; k <= 3; ++k) {
    for (int n = 0; n <= 12; ++n) {
      for (const Word& w : oracle::WordRange(k, n)) {
        REQUIRE(reverse(reverse(w)) == w);
      }
    }
  }
}

TEST_CASE("negate") {
  CHECK(negate(Word::from_string("001011")) == Word::from_string("110100"));
  CHECK(negate(Word()) == Word());
  CHECK(negate(Word::from_string("0")) == Word::from_string("1"));
  CHECK(negate(negate(Word::from_string("0110"))) == Word::from_string("0110"));
  CHECK_THROWS_AS(negate(Word::from_string("012", 3)), std::invalid_argument);
}

TEST_CASE("perfect shuffle") {
  CHECK(perfect_shuffle(Word::from_letters("clip", 26),
                        Word::from_letters("aloe", 26)) ==
        Word::from_letters("calliope", 26));
  CHECK(perfect_shuffle(Word(), Word()) == Word());
  CHECK(perfect_shuffle(Word::from_string("00"), Word::from_string("11")) ==
        Word::from_string("0101"));
  CHECK_THROWS_AS(perfect_shuffle(Word::from_string("0"),
                                  Word::from_string("01")),
                  std::invalid_argument);
}

TEST_CASE("conjugates") {
  const auto quad = conjugates(Word::from_string("0011"));
  CHECK(quad.size() == 4);
  CHECK(quad.contains(Word::from_string("0110")));
  CHECK(quad.contains(Word::from_string("1001")));
  CHECK(quad.contains(Word::from_string("1100")));

  const auto pair = conjugates(Word::from_string("0101"));
  CHECK(pair == std::set<Word>{Word::from_string("0101"),
                               Word::from_string("1010")});
  CHECK(conjugates(Word::from_letters("aaaa", 2)).size() == 1);
}

TEST_CASE("conjugacy class size equals primitive root length (exhaustive)") {
  for (int n = 1; n <= 12; ++n) {
    for (const Word& w : oracle::WordRange(2, n)) {
      REQUIRE(conjugates(w).size() == primitive_decomposition(w).root.size());
    }
  }
  for (int n = 1; n <= 9; ++n) {
    for (const Word& w : oracle::WordRange(3, n)) {
      REQUIRE(conjugates(w).size() == primitive_decomposition(w).root.size());
    }
  }
}

TEST_CASE("primitive decomposition") {
  const auto d = primitive_decomposition(Word::from_letters("aabaab", 2));
  CHECK(d.root == Word::from_letters("aab", 2));
  CHECK(d.exponent == 2);
  CHECK(primitive_decomposition(Word::from_string("012", 3)).exponent == 1);
  const auto unary = primitive_decomposition(Word::from_letters("aaaa", 2));
  CHECK(unary.root.size() == 1);
  CHECK(unary.exponent == 4);
  CHECK_THROWS_AS(primitive_decomposition(Word()), std::invalid_argument);
}

TEST_CASE("primitive decomposition round-trips and is minimal (exhaustive)") {
  for (int n = 1; n <= 12; ++n) {
    for (const Word& w : oracle::WordRange(2, n)) {
      const auto d = primitive_decomposition(w);
      REQUIRE(d.root.repeated(d.exponent) == w);
      REQUIRE(primitive_decomposition(d.root).exponent == 1);
    }
  }
}

TEST_CASE("even-primitivity") {
  CHECK(is_even_primitive(Word::from_letters("aabaab", 2)));
  CHECK_FALSE(is_even_primitive(Word::from_letters("abab", 2)));
  CHECK(is_even_primitive(Word::from_string("01")));
  CHECK_THROWS_AS(is_even_primitive(Word::from_string("010")),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_even_primitive(Word()), std::invalid_argument);
}

TEST_CASE("run-length encoding") {
  const auto rle = run_length_encode(Word::from_string("001011"));
  REQUIRE(rle.blocks.size() == 4);
  CHECK(rle.blocks[0] == RunLengthEncoding::Block{0, 2});
  CHECK(rle.blocks[1] == RunLengthEncoding::Block{1, 1});
  CHECK(rle.blocks[2] == RunLengthEncoding::Block{0, 1});
  CHECK(rle.blocks[3] == RunLengthEncoding::Block{1, 2});
  CHECK(run_length_encode(Word()).blocks.empty());
  CHECK(run_length_encode(Word::from_string("0000")).blocks.size() == 1);
}

TEST_CASE("run-length encoding round-trips (exhaustive, k=2, n<=14)") {
  for (int n = 0; n <= 14; ++n) {
    for (const Word& w : oracle::WordRange(2, n)) {
      const auto rle = run_length_encode(w);
      for (std::size_t i = 0; i + 1 < rle.blocks.size(); ++i) {
        REQUIRE(rle.blocks[i].symbol != rle.blocks[i + 1].symbol);
      }
      REQUIRE(run_length_decode(rle, 2) == w);
    }
  }
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("mobius divisor sums vanish except at 1") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    long long sum = 0;
    for (std::uint64_t d : divisors(n)) sum += mobius(d);
    REQUIRE(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("word parsing and rendering") {
  CHECK(Word::from_string("0102", 3).str() == "0102");
  CHECK_THROWS_AS(Word::from_string("012"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string("0!1"), std::invalid_argument);
  CHECK(Word::from_letters("ba", 2) == Word::from_string("10"));
  CHECK_THROWS_AS(Word::from_letters("abc", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<Symbol>{0, 3}, 2), std::invalid_argument);
}
