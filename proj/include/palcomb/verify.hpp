#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace palcomb {

struct VerifyResult {
  bool ok = true;
  std::string suite;
  std::string detail;          // what was checked, with bounds
  std::string counterexample;  // first failing word, when any
};

// Exhaustive verification suites behind `palcomb verify`. Each runs one
// result's full check up to max_n and reports the first counterexample on
// failure.
std::vector<std::string> verify_suite_names();
VerifyResult run_verify_suite(std::string_view name, int max_n);

// Conjugacy classes hold at most two palindromes; two-palindrome classes
// yield a valid (x, i) witness; odd-root classes never reach two.
VerifyResult verify_class_palindrome_bound(int max_n);
// Palindromic-pair factorization count equals the primitive exponent, and
// credibility coincides with having a factorization.
VerifyResult verify_pal_factorization_count(int max_n);
// O(n,k) = k*E(n,k); recurrences match brute force; split counts match brute
// force; even-primitive words have at most one factorization per parity and
// inherit parity from their root.
VerifyResult verify_pair_parity_counts(int max_n);
// Every word of language I is rich, and the I-census DP matches the filter.
VerifyResult verify_language_I_rich(int max_n);
// Greedy prime antipalstar factorization is valid and unique.
VerifyResult verify_antipalstar_factorization(int max_n);
// At most n-1 distinct antipalindromic factors.
VerifyResult verify_antipal_factor_bound(int max_n);
// Exactly two words per length attain n-1 antipalindromic factors.
VerifyResult verify_a_rich_uniqueness(int max_n);
// Creaky factorization count equals the primitive exponent.
VerifyResult verify_creaky_factor_count(int max_n);
// The creaky <-> even-pair maps are mutually inverse bijections per length.
VerifyResult verify_creaky_bijection(int max_n);
// The basic structural propositions (powers, products, shuffles, quotient
// sets, richness closure properties, creaky powers).
VerifyResult verify_propositions(int max_n);

}  // namespace palcomb
