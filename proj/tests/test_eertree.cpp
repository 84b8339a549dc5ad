#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "palcomb/eertree.hpp"
#include "palcomb/oracle.hpp"

using namespace palcomb;

TEST_CASE("pushes report new palindromes") {
  Eertree t(2);
  CHECK(t.push(0).created_new);
  CHECK(t.push(1).created_new);

  Eertree unary(2);
  CHECK(unary.push(0).created_new);
  CHECK(unary.push(0).created_new);
  CHECK(unary.push(0).created_new);  // 000
  CHECK(unary.distinct_palindromes() == 3);

  Eertree alt(2);
  alt.push(0);
  alt.push(1);
  alt.push(0);
  CHECK(alt.push(1).created_new);  // 101 is new in 0101
  CHECK(alt.distinct_palindromes() == 4);
}

TEST_CASE("distinct palindrome counts") {
  Eertree t(2);
  CHECK(t.distinct_palindromes() == 0);
  for (Symbol s : {0, 0, 1, 0, 0}) t.push(s);
  CHECK(t.distinct_palindromes() == 5);  // 0, 00, 1, 010, 00100
}

TEST_CASE("pop restores the previous state exactly") {
  Eertree t(2);
  const std::string fresh = t.dump();
  t.push(0);
  t.pop();
  CHECK(t.dump() == fresh);

  for (Symbol s : {1, 0, 0, 1, 1}) t.push(s);
  for (int i = 0; i < 5; ++i) t.pop();
  CHECK(t.dump() == fresh);
  CHECK(t.distinct_palindromes() == 0);
  CHECK(t.text_length() == 0);
}

TEST_CASE("errors") {
  Eertree t(2);
  CHECK_THROWS_AS(t.push(2), std::invalid_argument);
  CHECK_THROWS_AS(t.pop(), std::logic_error);
}

TEST_CASE("counts match the factor-scan oracle (exhaustive, n<=14)") {
  for (int n = 0; n <= 14; ++n) {
    for (const Word& w : oracle::WordRange(2, n)) {
      Eertree t(2);
      int count = 0;
      for (Symbol s : w.symbols()) {
        const int before = t.distinct_palindromes();
        const bool created = t.push(s).created_new;
        const int delta = t.distinct_palindromes() - before;
        REQUIRE(delta == (created ? 1 : 0));
        ++count;
        REQUIRE(t.distinct_palindromes() <= count);
      }
      REQUIRE(static_cast<std::size_t>(t.distinct_palindromes()) ==
              oracle::brute_distinct_palindromic_factors(w).size());
    }
  }
}

TEST_CASE("randomized push/pop interleavings restore state") {
  std::mt19937 rng(20240517);
  Eertree t(2);
  std::vector<std::string> checkpoints;
  checkpoints.push_back(t.dump());
  int operations = 0;
  while (operations < 100000) {
    const bool can_pop = t.text_length() > 0;
    const bool do_push = !can_pop || (rng() % 100 < 55);
    if (do_push) {
      checkpoints.push_back(t.dump());
      t.push(static_cast<Symbol>(rng() % 2));
    } else {
      t.pop();
      REQUIRE(t.dump() == checkpoints.back());
      checkpoints.pop_back();
    }
    ++operations;
  }
}
