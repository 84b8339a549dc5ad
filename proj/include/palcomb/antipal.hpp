#pragma once

#include <cstdint>
#include <vector>

#include "palcomb/pal_pairs.hpp"
#include "palcomb/word.hpp"

namespace palcomb {

// Everything here works over the binary alphabet; non-binary input errors.

// True iff w equals the complement of its reversal. Always false for odd
// nonzero lengths; vacuously true for the empty word.
bool is_antipalindrome(const Word& w);
bool is_antipalindrome_range(const Word& w, std::size_t pos, std::size_t len);

// True iff w is a concatenation of one or more antipalindromes. The empty
// word does not qualify under the "one or more" reading.
bool is_antipalstar(const Word& w);

// The unique factorization of an antipalstar into prime antipalstars
// (antipalindromes that are not a product of two or more antipalindromes).
struct PrimeAntipalstarFactorization {
  std::vector<Word> factors;
};

// Greedily strips the shortest nonempty antipalindromic prefix; prime
// antipalindromes form a prefix code, so this is the unique factorization.
// Errors on a non-antipalstar, naming the first unsplittable position.
PrimeAntipalstarFactorization prime_antipalstar_factorization(const Word& w);

// Number of distinct nonempty antipalindromic factors; at most |w|-1.
std::uint64_t antipal_factor_count(const Word& w);

// The exactly two words of length n attaining n-1 antipalindromic factors:
// (10)^k / (01)^k for n=2k, (10)^k 1 / (01)^k 0 for n=2k+1.
std::vector<Word> a_rich_words(int n);

// True iff some rotation of w equals the complement of its reversal; exactly
// the members of A^2.
bool is_creaky(const Word& w);

// All splits w = u.v with both parts antipalindromes, v nonempty; the count
// equals the primitive exponent for creaky words, else 0.
std::vector<Factorization> creaky_factorizations(const Word& w);

// The bijection between creaky words and even palindromic pairs of the same
// length: negate every second letter. An involution, so the two maps invert
// each other; each checks its own precondition.
Word creaky_to_even_pair(const Word& w);
Word even_pair_to_creaky(const Word& w);

// |A^2 ∩ {0,1}^n| by enumeration, cross-checked against E(n,2); the two
// routes must agree.
std::uint64_t count_creaky(int n);

}  // namespace palcomb
