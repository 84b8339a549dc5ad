#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "palcomb/word.hpp"

// Brute-force reference implementations. Deliberately naive (full
// enumeration, quadratic scans) and deliberately independent: nothing here
// calls the optimized code paths it exists to check.
namespace palcomb::oracle {

enum class Filter { all, least_rotation, fixed_first };

inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 30;
inline constexpr std::size_t kFactorScanCap = 64;

// Lexicographic stream over all k-ary words of length n, optionally
// restricted to least-rotation class representatives or to words starting
// with symbol 0. Refuses ranges with k^n beyond the enumeration budget.
class WordRange {
 public:
  WordRange(int k, int n, Filter filter = Filter::all);

  class iterator {
   public:
    using value_type = Word;

    const Word& operator*() const { return current_; }
    iterator& operator++();
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class WordRange;
    iterator(int k, int n, Filter filter, bool done);
    bool passes_filter() const;
    bool advance_raw();

    Word current_;
    Filter filter_ = Filter::all;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const;

 private:
  int k_;
  int n_;
  Filter filter_;
};

// All distinct nonempty palindromic (or antipalindromic) factors, by
// quadratic window scan. Capped at length 64.
std::set<Word> brute_distinct_palindromic_factors(const Word& w,
                                                  bool antipalindromic = false);

// Names accepted by brute_count.
std::vector<std::string> predicate_names();

// Exact filter-count of the length-n k-ary words under a named predicate.
std::uint64_t brute_count(std::string_view predicate, int n, int k);

// The literal unioccurrence condition: for every prefix, the longest
// palindromic suffix has no earlier occurrence in that prefix.
bool brute_longest_pal_suffix_unioccurrent(const Word& w);

}  // namespace palcomb::oracle
