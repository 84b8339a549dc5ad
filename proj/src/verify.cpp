#include "palcomb/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "palcomb/antipal.hpp"
#include "palcomb/oracle.hpp"
#include "palcomb/pal_pairs.hpp"
#include "palcomb/palindromes.hpp"
#include "palcomb/rich.hpp"

namespace palcomb {

namespace {

using oracle::WordRange;

VerifyResult pass(std::string suite, std::string detail) {
  return {true, std::move(suite), std::move(detail), ""};
}

VerifyResult fail(std::string suite, std::string detail, std::string cex) {
  return {false, std::move(suite), std::move(detail), std::move(cex)};
}

std::vector<Word> binary_palindromes_up_to(int max_len) {
  std::vector<Word> out;
  for (int n = 1; n <= max_len; ++n) {
    for (const Word& w : WordRange(2, n)) {
      if (is_palindrome(w)) out.push_back(w);
    }
  }
  return out;
}

bool parity_includes_even(PairParity p) {
  return p == PairParity::even || p == PairParity::both;
}

bool parity_includes_odd(PairParity p) {
  return p == PairParity::odd || p == PairParity::both;
}

}  // namespace

VerifyResult verify_class_palindrome_bound(int max_n) {
  const std::string suite = "theorem1";
  for (int n = 1; n <= max_n; ++n) {
    for (const Word& w : WordRange(2, n, oracle::Filter::least_rotation)) {
      ClassPalindromeReport report;
      try {
        report = analyze_conjugacy_class(w);
      } catch (const std::logic_error& e) {
        return fail(suite, e.what(), w.str());
      }
      if (report.palindrome_count > 2) {
        return fail(suite, "class with more than two palindromes", w.str());
      }
      const auto root = primitive_decomposition(w);
      if (root.root.size() % 2 == 1 && report.palindrome_count == 2) {
        return fail(suite, "odd-root class reported two palindromes", w.str());
      }
      if (report.palindrome_count == 2) {
        if (!report.structure_witness) {
          return fail(suite, "two-palindrome class lacks a witness", w.str());
        }
        const auto& [x, i] = *report.structure_witness;
        const Word xxr = x + reverse(x);
        const Word xrx = reverse(x) + x;
        if (i < 1 || primitive_decomposition(xxr).exponent != 1 ||
            !report.palindromes.contains(xxr.repeated(i)) ||
            !report.palindromes.contains(xrx.repeated(i)) ||
            xxr.repeated(i) == xrx.repeated(i)) {
          return fail(suite, "invalid (x, i) witness", w.str());
        }
      } else if (report.structure_witness) {
        return fail(suite, "witness present without two palindromes", w.str());
      }
    }
  }
  return pass(suite, "all binary conjugacy classes up to length " +
                         std::to_string(max_n) + " checked");
}

VerifyResult verify_pal_factorization_count(int max_n) {
  const std::string suite = "theorem4";
  for (int n = 1; n <= max_n; ++n) {
    for (const Word& w : WordRange(2, n)) {
      const auto facts = pal_factorizations(w);
      for (const auto& f : facts) {
        if (f.right.empty() || f.left + f.right != w ||
            !is_palindrome(f.left) || !is_palindrome(f.right)) {
          return fail(suite, "invalid factorization emitted", w.str());
        }
      }
      const bool credible = is_credible(w);
      if (credible != !facts.empty()) {
        return fail(suite, "credibility disagrees with factorization",
                    w.str());
      }
      const int exponent = primitive_decomposition(w).exponent;
      const std::size_t expected =
          credible ? static_cast<std::size_t>(exponent) : 0;
      if (facts.size() != expected) {
        return fail(suite,
                    "factorization count " + std::to_string(facts.size()) +
                        " != expected " + std::to_string(expected),
                    w.str());
      }
    }
  }
  return pass(suite, "factorization counts equal primitive exponents up to "
                     "length " +
                         std::to_string(max_n));
}

VerifyResult verify_pair_parity_counts(int max_n) {
  const std::string suite = "theorem5";
  // O(n,k) = k * E(n,k) straight from the recurrences.
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= max_n; ++n) {
      if (count_odd_pairs(n, k) !=
          checked_mul(static_cast<u128>(k), count_even_pairs(n, k))) {
        return fail(suite, "O != k*E at n=" + std::to_string(n) +
                               ", k=" + std::to_string(k),
                    "");
      }
    }
    if (count_even_prim(2, k) != static_cast<u128>(k) ||
        count_odd_prim(2, k) != checked_mul(static_cast<u128>(k),
                                            static_cast<u128>(k))) {
      return fail(suite, "base case wrong at k=" + std::to_string(k), "");
    }
  }
  // Recurrence vs. brute force.
  for (int n = 0; n <= std::min(max_n, 14); ++n) {
    if (count_even_pairs(n, 2) != oracle::brute_count("even-pair", n, 2) ||
        count_odd_pairs(n, 2) != oracle::brute_count("odd-pair", n, 2)) {
      return fail(suite, "recurrence disagrees with brute force at n=" +
                             std::to_string(n) + ", k=2",
                  "");
    }
  }
  for (int n = 0; n <= std::min(max_n, 10); ++n) {
    if (count_even_pairs(n, 3) != oracle::brute_count("even-pair", n, 3) ||
        count_odd_pairs(n, 3) != oracle::brute_count("odd-pair", n, 3)) {
      return fail(suite, "recurrence disagrees with brute force at n=" +
                             std::to_string(n) + ", k=3",
                  "");
    }
  }
  // Split counts vs. brute force.
  for (int k = 2; k <= 3; ++k) {
    for (int n = 2; n <= std::min(max_n, 12); n += 2) {
      if (k == 3 && n > 10) continue;
      std::vector<std::uint64_t> brute(static_cast<std::size_t>(n), 0);
      for (const Word& w : WordRange(k, n)) {
        for (int i = 0; i < n; ++i) {
          if (is_palindrome_range(w, 0, static_cast<std::size_t>(i)) &&
              is_palindrome_range(w, static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(n - i))) {
            ++brute[static_cast<std::size_t>(i)];
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        if (split_count(n, i, k) !=
            static_cast<u128>(brute[static_cast<std::size_t>(i)])) {
          return fail(suite,
                      "split_count(" + std::to_string(n) + "," +
                          std::to_string(i) + "," + std::to_string(k) +
                          ") disagrees with brute force",
                      "");
        }
      }
    }
  }
  // Even-primitive words: at most one factorization per parity, and parity
  // inherited by powers.
  for (int n = 2; n <= std::min(max_n, 14); n += 2) {
    for (const Word& w : WordRange(2, n)) {
      if (!is_even_primitive(w)) continue;
      int even_splits = 0, odd_splits = 0;
      for (int cut = 0; cut < n; ++cut) {
        if (is_palindrome_range(w, 0, static_cast<std::size_t>(cut)) &&
            is_palindrome_range(w, static_cast<std::size_t>(cut),
                                static_cast<std::size_t>(n - cut))) {
          ++(cut % 2 == 0 ? even_splits : odd_splits);
        }
      }
      if (even_splits > 1 || odd_splits > 1) {
        return fail(suite, "even-primitive word with repeated parity split",
                    w.str());
      }
      const PairParity base = pair_parity(w);
      for (int m = 2; m <= 3; ++m) {
        if (n * m > std::min(max_n, 14)) break;
        const PairParity powered = pair_parity(w.repeated(m));
        if (parity_includes_even(powered) != parity_includes_even(base) ||
            parity_includes_odd(powered) != parity_includes_odd(base)) {
          return fail(suite, "power changed pair parity (m=" +
                                 std::to_string(m) + ")",
                      w.str());
        }
      }
    }
  }
  // "Both" only happens for non-primitive words.
  for (int n = 2; n <= std::min(max_n, 12); n += 2) {
    for (const Word& w : WordRange(2, n)) {
      if (pair_parity(w) == PairParity::both &&
          primitive_decomposition(w).exponent == 1) {
        return fail(suite, "primitive word with both parities", w.str());
      }
    }
  }
  return pass(suite, "O = k*E and supporting structure verified up to n=" +
                         std::to_string(max_n));
}

VerifyResult verify_language_I_rich(int max_n) {
  const std::string suite = "theorem6";
  const CensusTable table = census_I(max_n);
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t members = 0;
    for (const Word& w : WordRange(2, n)) {
      if (!in_language_I(w)) continue;
      ++members;
      if (!is_rich(w)) {
        return fail(suite, "word of language I is not rich", w.str());
      }
    }
    if (table.rows.at(n) != static_cast<u128>(members)) {
      return fail(suite,
                  "I-census DP disagrees with filter at n=" + std::to_string(n),
                  "");
    }
  }
  return pass(suite, "language I is rich and the census matches the filter "
                     "up to n=" +
                         std::to_string(max_n));
}

VerifyResult verify_antipalstar_factorization(int max_n) {
  const std::string suite = "theorem8";
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t stars = 0;
    for (const Word& w : WordRange(2, n)) {
      const bool star = is_antipalstar(w);
      if (!star) {
        bool threw = false;
        try {
          prime_antipalstar_factorization(w);
        } catch (const std::invalid_argument&) {
          threw = true;
        }
        if (!threw) {
          return fail(suite, "factorization succeeded on a non-antipalstar",
                      w.str());
        }
        continue;
      }
      ++stars;
      const auto greedy = prime_antipalstar_factorization(w);
      Word rebuilt(std::vector<Symbol>{}, 2);
      for (const Word& f : greedy.factors) rebuilt = rebuilt + f;
      if (rebuilt != w || greedy.factors.empty()) {
        return fail(suite, "greedy factors do not rebuild the word", w.str());
      }
      // Tables over the word: antipalindromic windows, splittable windows,
      // prime windows, then the count of factorizations into primes.
      const std::size_t len = w.size();
      auto anti = [&](std::size_t i, std::size_t j) {
        return is_antipalindrome_range(w, i, j - i);
      };
      std::vector<std::vector<char>> splittable(
          len + 1, std::vector<char>(len + 1, 0));
      for (std::size_t span = 2; span <= len; span += 2) {
        for (std::size_t i = 0; i + span <= len; ++i) {
          const std::size_t j = i + span;
          for (std::size_t c = i + 2; c <= j; c += 2) {
            if (anti(i, c) && (c == j || splittable[c][j])) {
              splittable[i][j] = 1;
              break;
            }
          }
        }
      }
      auto prime = [&](std::size_t i, std::size_t j) {
        if (!anti(i, j)) return false;
        for (std::size_t c = i + 2; c < j; c += 2) {
          if (anti(i, c) && splittable[c][j]) return false;
        }
        return true;
      };
      for (const Word& f : greedy.factors) {
        if (!is_antipalindrome(f)) {
          return fail(suite, "greedy factor is not an antipalindrome",
                      w.str());
        }
      }
      // Each greedy factor must be prime at its own position.
      {
        std::size_t at = 0;
        for (const Word& f : greedy.factors) {
          if (!prime(at, at + f.size())) {
            return fail(suite, "greedy factor is not prime", w.str());
          }
          at += f.size();
        }
      }
      std::vector<std::uint64_t> ways(len + 1, 0);
      ways[0] = 1;
      for (std::size_t j = 2; j <= len; j += 2) {
        for (std::size_t i = 0; i < j; i += 2) {
          if (ways[i] && prime(i, j)) ways[j] += ways[i];
        }
      }
      if (ways[len] != 1) {
        return fail(suite,
                    "prime factorization count is " + std::to_string(ways[len]),
                    w.str());
      }
    }
    if (stars != oracle::brute_count("antipalstar", n, 2)) {
      return fail(suite, "antipalstar count disagrees with brute force at n=" +
                             std::to_string(n),
                  "");
    }
  }
  return pass(suite, "prime antipalstar factorizations unique up to n=" +
                         std::to_string(max_n));
}

VerifyResult verify_antipal_factor_bound(int max_n) {
  const std::string suite = "theorem9";
  for (int n = 1; n <= max_n; ++n) {
    for (const Word& w : WordRange(2, n)) {
      const std::uint64_t count = antipal_factor_count(w);
      if (count > static_cast<std::uint64_t>(n - 1)) {
        return fail(suite, "more than n-1 antipalindromic factors", w.str());
      }
      if (n <= 12 &&
          count != oracle::brute_distinct_palindromic_factors(w, true).size()) {
        return fail(suite, "factor count disagrees with oracle scan", w.str());
      }
    }
  }
  return pass(suite, "antipalindromic factor bound n-1 holds up to n=" +
                         std::to_string(max_n));
}

VerifyResult verify_a_rich_uniqueness(int max_n) {
  const std::string suite = "theorem10";
  for (int n = 1; n <= max_n; ++n) {
    const auto expected = a_rich_words(n);
    const std::set<Word> expected_set(expected.begin(), expected.end());
    if (expected_set.size() != 2) {
      return fail(suite, "constructed a-rich words are not distinct at n=" +
                             std::to_string(n),
                  "");
    }
    std::uint64_t achievers = 0;
    for (const Word& w : WordRange(2, n)) {
      const bool attains =
          antipal_factor_count(w) == static_cast<std::uint64_t>(n - 1);
      if (attains != expected_set.contains(w)) {
        return fail(suite, "a-rich set mismatch", w.str());
      }
      if (attains) ++achievers;
    }
    if (achievers != 2) {
      return fail(suite,
                  "expected exactly two a-rich words, found " +
                      std::to_string(achievers) + " at n=" + std::to_string(n),
                  "");
    }
  }
  return pass(suite, "exactly two a-rich words per length up to n=" +
                         std::to_string(max_n));
}

VerifyResult verify_creaky_factor_count(int max_n) {
  const std::string suite = "theorem12";
  for (int n = 1; n <= max_n; ++n) {
    for (const Word& w : WordRange(2, n)) {
      const auto facts = creaky_factorizations(w);
      for (const auto& f : facts) {
        if (f.right.empty() || f.left + f.right != w ||
            !is_antipalindrome(f.left) || !is_antipalindrome(f.right)) {
          return fail(suite, "invalid creaky factorization", w.str());
        }
      }
      const std::size_t expected =
          is_creaky(w)
              ? static_cast<std::size_t>(primitive_decomposition(w).exponent)
              : 0;
      if (facts.size() != expected) {
        return fail(suite,
                    "creaky factorization count " +
                        std::to_string(facts.size()) + " != expected " +
                        std::to_string(expected),
                    w.str());
      }
    }
  }
  return pass(suite, "creaky factorization counts equal primitive exponents "
                     "up to n=" +
                         std::to_string(max_n));
}

VerifyResult verify_creaky_bijection(int max_n) {
  const std::string suite = "theorem13";
  for (int n = 1; n <= max_n; ++n) {
    std::set<Word> images;
    std::uint64_t creaky_count = 0, even_pair_count = 0;
    for (const Word& w : WordRange(2, n)) {
      const bool even_pair = parity_includes_even(pair_parity(w));
      if (even_pair) ++even_pair_count;
      if (!is_creaky(w)) continue;
      ++creaky_count;
      const Word image = creaky_to_even_pair(w);
      if (image.size() != w.size() ||
          !parity_includes_even(pair_parity(image))) {
        return fail(suite, "image is not an even palindromic pair", w.str());
      }
      images.insert(image);
      if (even_pair_to_creaky(image) != w) {
        return fail(suite, "round trip failed (creaky -> pair -> creaky)",
                    w.str());
      }
    }
    if (images.size() != creaky_count) {
      return fail(suite, "creaky map not injective at n=" + std::to_string(n),
                  "");
    }
    if (static_cast<u128>(creaky_count) != count_even_pairs(n, 2) ||
        creaky_count != even_pair_count) {
      return fail(suite,
                  "creaky cardinality != E(n,2) at n=" + std::to_string(n),
                  "");
    }
    // Backward round trip over every even pair.
    for (const Word& w : WordRange(2, n)) {
      if (!parity_includes_even(pair_parity(w))) continue;
      const Word preimage = even_pair_to_creaky(w);
      if (!is_creaky(preimage) || creaky_to_even_pair(preimage) != w) {
        return fail(suite, "round trip failed (pair -> creaky -> pair)",
                    w.str());
      }
    }
  }
  return pass(suite, "creaky <-> even-pair bijection verified up to n=" +
                         std::to_string(max_n));
}

VerifyResult verify_propositions(int max_n) {
  const std::string suite = "propositions";
  auto bound = [max_n](int stated) { return std::min(stated, max_n); };

  // Powers share palindromicity.
  for (int n = 1; n <= bound(14); ++n) {
    for (const Word& w : WordRange(2, n)) {
      const bool base = is_palindrome(w);
      if (is_palindrome(w.repeated(2)) != base ||
          is_palindrome(w.repeated(3)) != base) {
        return fail(suite, "palindromicity not shared across powers", w.str());
      }
    }
  }
  // A product of palindromes is a palindrome iff they share a primitive root.
  {
    const auto pals = binary_palindromes_up_to(bound(12) - 1);
    for (const Word& u : pals) {
      for (const Word& v : pals) {
        if (u.size() + v.size() > static_cast<std::size_t>(bound(12))) continue;
        const Word uv = u + v;
        const bool common_root =
            primitive_decomposition(u).root == primitive_decomposition(v).root;
        if (is_palindrome(uv) != common_root) {
          return fail(suite, "palindrome product root criterion failed",
                      uv.str());
        }
        if (common_root && primitive_decomposition(uv).root !=
                               primitive_decomposition(u).root) {
          return fail(suite, "product root differs from common root",
                      uv.str());
        }
      }
    }
  }
  // Even-length palindromes are exactly the shuffles y sha y^R.
  for (int n = 2; n <= bound(12); n += 2) {
    for (const Word& w : WordRange(2, n)) {
      std::vector<Symbol> odd_positions;
      for (std::size_t i = 0; i < w.size(); i += 2) odd_positions.push_back(w[i]);
      const Word y(std::move(odd_positions), 2);
      const bool via_shuffle = perfect_shuffle(y, reverse(y)) == w;
      if (is_palindrome(w) != via_shuffle) {
        return fail(suite, "shuffle characterization failed", w.str());
      }
    }
  }
  // Right quotient P/P equals P^2 (witness bound |y| <= |x| + 2).
  {
    const int x_bound = bound(10);
    const auto pals = binary_palindromes_up_to(x_bound + 2);
    for (int n = 1; n <= x_bound; ++n) {
      for (const Word& x : WordRange(2, n)) {
        bool in_quotient = is_palindrome(x);  // y = empty word
        for (const Word& y : pals) {
          if (in_quotient) break;
          if (y.size() > x.size() + 2) continue;
          in_quotient = is_palindrome(x + y);
        }
        if (in_quotient != is_credible(x)) {
          return fail(suite, "P/P membership differs from credibility",
                      x.str());
        }
      }
    }
  }
  // Credibility coincides with having a palindromic factorization.
  for (int n = 1; n <= bound(14); ++n) {
    for (const Word& w : WordRange(2, n)) {
      if (is_credible(w) != !pal_factorizations(w).empty()) {
        return fail(suite, "credibility/factorization mismatch", w.str());
      }
    }
  }
  // Richness closure: factors, reversal, unioccurrent suffix criterion.
  for (int n = 1; n <= bound(14); ++n) {
    for (const Word& w : WordRange(2, n)) {
      const bool rich = is_rich(w);
      if (rich) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          for (std::size_t len = 1; len <= w.size() - pos; ++len) {
            if (!is_rich(w.factor(pos, len))) {
              return fail(suite, "factor of a rich word is not rich",
                          w.str());
            }
          }
        }
      }
      if (rich != is_rich(reverse(w))) {
        return fail(suite, "richness not preserved by reversal", w.str());
      }
      if (rich != oracle::brute_longest_pal_suffix_unioccurrent(w)) {
        return fail(suite, "unioccurrent-suffix criterion mismatch", w.str());
      }
    }
  }
  // Antipalindrome analogues: powers, products, shuffles.
  for (int n = 1; n <= bound(14); ++n) {
    for (const Word& w : WordRange(2, n)) {
      const bool base = is_antipalindrome(w);
      if (is_antipalindrome(w.repeated(2)) != base ||
          is_antipalindrome(w.repeated(3)) != base) {
        return fail(suite, "antipalindromicity not shared across powers",
                    w.str());
      }
    }
  }
  {
    std::vector<Word> antis;
    for (int n = 2; n <= bound(12) - 2; n += 2) {
      for (const Word& w : WordRange(2, n)) {
        if (is_antipalindrome(w)) antis.push_back(w);
      }
    }
    for (const Word& u : antis) {
      for (const Word& v : antis) {
        if (u.size() + v.size() > static_cast<std::size_t>(bound(12))) continue;
        const Word uv = u + v;
        const bool common_root =
            primitive_decomposition(u).root == primitive_decomposition(v).root;
        if (is_antipalindrome(uv) != common_root) {
          return fail(suite, "antipalindrome product root criterion failed",
                      uv.str());
        }
      }
    }
  }
  for (int n = 2; n <= bound(12); n += 2) {
    for (const Word& w : WordRange(2, n)) {
      std::vector<Symbol> odd_positions;
      for (std::size_t i = 0; i < w.size(); i += 2) odd_positions.push_back(w[i]);
      const Word z = negate(Word(std::move(odd_positions), 2));
      const bool via_shuffle = perfect_shuffle(negate(z), reverse(z)) == w;
      if (is_antipalindrome(w) != via_shuffle) {
        return fail(suite, "antipalindrome shuffle characterization failed",
                    w.str());
      }
    }
  }
  // Creaky powers.
  for (int n = 1; n <= bound(14); ++n) {
    for (const Word& w : WordRange(2, n)) {
      const bool base = is_creaky(w);
      if (is_creaky(w.repeated(2)) != base || is_creaky(w.repeated(3)) != base) {
        return fail(suite, "creakiness not shared across powers", w.str());
      }
    }
  }
  return pass(suite, "structural propositions verified (bounds capped at " +
                         std::to_string(max_n) + ")");
}

std::vector<std::string> verify_suite_names() {
  return {"theorem1",  "theorem4",  "theorem5",  "theorem6",
          "theorem8",  "theorem9",  "theorem10", "theorem12",
          "theorem13", "propositions"};
}

VerifyResult run_verify_suite(std::string_view name, int max_n) {
  struct Entry {
    VerifyResult (*fn)(int);
    int default_bound;
  };
  static const std::map<std::string, Entry, std::less<>> suites = {
      {"theorem1", {verify_class_palindrome_bound, 16}},
      {"theorem4", {verify_pal_factorization_count, 14}},
      {"theorem5", {verify_pair_parity_counts, 20}},
      {"theorem6", {verify_language_I_rich, 18}},
      {"theorem8", {verify_antipalstar_factorization, 16}},
      {"theorem9", {verify_antipal_factor_bound, 16}},
      {"theorem10", {verify_a_rich_uniqueness, 16}},
      {"theorem12", {verify_creaky_factor_count, 14}},
      {"theorem13", {verify_creaky_bijection, 14}},
      {"propositions", {verify_propositions, 14}},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) {
    throw std::invalid_argument("unknown verification suite '" +
                                std::string(name) + "'");
  }
  const int n = max_n > 0 ? max_n : it->second.default_bound;
  return it->second.fn(n);
}

}  // namespace palcomb
