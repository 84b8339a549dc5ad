#pragma once

#include <optional>
#include <set>
#include <utility>

#include "palcomb/int128.hpp"
#include "palcomb/word.hpp"

namespace palcomb {

bool is_palindrome(const Word& w);
// Palindrome test on the factor w[pos..pos+len); avoids copies in hot loops.
bool is_palindrome_range(const Word& w, std::size_t pos, std::size_t len);

// What a conjugacy class looks like palindrome-wise: a class holds at most
// two palindromes, and exactly two only when it is the class of (x x^R)^i
// with x x^R primitive. The witness (x, i) is present iff the count is 2.
struct ClassPalindromeReport {
  int palindrome_count = 0;
  std::set<Word> palindromes;
  std::optional<std::pair<Word, int>> structure_witness;
};

ClassPalindromeReport analyze_conjugacy_class(const Word& w);

// Number of k-ary words of length n that are both primitive and a
// palindrome: sum over d|n of mu(d) * k^floor((n/d+1)/2).
u128 primitive_palindrome_count(int k, int n);

// Number of distinct conjugates of k-ary palindromes of length n:
// sum over d|n of f(d)*rho(k,d), f(d)=d for odd d, d/2 for even d.
u128 palindrome_conjugate_count(int k, int n);

}  // namespace palcomb
