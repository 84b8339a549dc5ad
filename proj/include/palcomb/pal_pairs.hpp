#pragma once

#include <cstdint>
#include <vector>

#include "palcomb/int128.hpp"
#include "palcomb/word.hpp"

namespace palcomb {

// A split w = left . right with right nonempty and both parts satisfying the
// relevant palindromicity predicate (palindromes here; antipalindromes when
// reused for creaky words).
struct Factorization {
  Word left;
  Word right;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// A word may split into two even-length palindromes, two odd-length ones,
// both ways, or neither; "both" happens only for non-primitive words.
enum class PairParity { none, even, odd, both };

// True iff w is a conjugate of its own reversal; exactly the members of P^2.
bool is_credible(const Word& w);

// All splits w = u.v with u, v palindromes and v nonempty, by increasing |u|.
// The count equals the primitive exponent of w whenever w is in P^2, else 0.
std::vector<Factorization> pal_factorizations(const Word& w);

PairParity pair_parity(const Word& w);

// Number of length-n words with a palindromic split at position i (palindrome
// lengths i and n-i): k^(n/2) for even i, k^(n/2+1) for odd i.
u128 split_count(int n, int i, int k);

// E'(n), O'(n): even-primitive even/odd palindromic pairs of length n, via
// the divisor recurrence. Even n >= 2 only.
u128 count_even_prim(int n, int k);
u128 count_odd_prim(int n, int k);

// E(n,k), O(n,k): even/odd palindromic pairs of length n. Zero for odd n;
// E(0,k)=1 (the empty word is a product of two even palindromes), O(0,k)=0.
u128 count_even_pairs(int n, int k);
u128 count_odd_pairs(int n, int k);

// |P^2 ∩ Σ^n| by enumeration with the credibility predicate.
std::uint64_t count_pal_pairs(int n, int k);

}  // namespace palcomb
