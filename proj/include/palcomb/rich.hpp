#pragma once

#include <optional>

#include "palcomb/census.hpp"
#include "palcomb/int128.hpp"
#include "palcomb/word.hpp"

namespace palcomb {

// A length-n word is rich when it has n distinct nonempty palindromic
// factors, the maximum possible. Checked as "every eertree push creates a
// node": a push adds at most one distinct palindrome, so any non-creating
// step already loses the maximum.
bool is_rich(const Word& w);

// Language I: the run-length exponents satisfy s_i <= s_{i+2}.
bool in_language_I(const Word& w);

// The rich census refuses to run past this length without an override; the
// published values beyond desk scale came from a technique this tool does
// not reproduce.
inline constexpr int kRichCensusBudget = 32;

// Exact count of binary rich words for every length 1..n_max, by pruned DFS
// over the tree of rich prefixes (a word with a non-rich prefix is not rich),
// first letter fixed and counts doubled. Workers split the DFS forest at a
// fixed depth and replay their prefix into a private tree.
CensusTable census_rich(int n_max, int threads = 1,
                        bool override_budget = false);

// Exact count of binary words of language I for lengths 1..n_max, by dynamic
// programming over (remaining length, minimum next block size, minimum size
// for the following block), doubled for the starting letter.
CensusTable census_I(int n_max);

// Integer partitions: p(n) and p(n, k) (exactly k parts), exact.
u128 partitions(int n);
u128 partitions_k(int n, int k);

// Hardy-Ramanujan-Uspensky asymptotic e^(pi*sqrt(2n/3)) / (4n*sqrt(3)).
double hru_estimate(int n);

double n_pow_sqrt_n(int n);

// Every term of the partition-injection bound chain, evaluated exactly:
//   C_I(n) >= p(n)  and  C_I(n) > sum_k p(n/2,k)^2 > (max_k p(n/2,k))^2
//                        > 4 p(n/2)^2 / n^2,
// with strictness recorded per term (the small sizes degenerate to equality).
struct BoundReport {
  int n = 0;            // even length the chain was evaluated at
  int requested_n = 0;  // as asked; odd requests are served by n-1
  bool substituted = false;

  u128 c_i = 0;            // C_I(n)
  u128 p_n = 0;            // p(n)
  u128 p_half = 0;         // p(n/2)
  u128 sum_sq_parts = 0;   // sum_{k=1}^{n/2-1} p(n/2,k)^2
  u128 max_part_sq = 0;    // (max_k p(n/2,k))^2
  u128 four_p_half_sq = 0; // 4*p(n/2)^2, compared against max_part_sq * n^2

  bool ci_ge_p = false;
  bool chain1_holds = false;  // C_I(n) >= sum_sq_parts
  bool chain1_strict = false;
  bool chain2_holds = false;  // sum_sq_parts >= max_part_sq
  bool chain2_strict = false;
  bool chain3_holds = false;  // max_part_sq >= 4 p(n/2)^2 / n^2
  bool chain3_strict = false;

  double ln_cr_lower = 0.0;   // ln C_I(n), a certified lower bound for ln C_R
  double leading_term = 0.0;  // (2*pi/sqrt(3)) * sqrt(n)
  double hru_p_estimate = 0.0;
  std::optional<double> table1_ratio;  // cr_value / n^sqrt(n)
  std::optional<u128> cr_value;
};

// Strict version: n must be even and >= 4.
BoundReport bound_report(int n, std::optional<u128> cr_value = {});
// Convenience used by the CLI: an odd n is served by the n-1 chain, with the
// substitution marked in the report.
BoundReport bound_report_any(int n, std::optional<u128> cr_value = {});

}  // namespace palcomb
