#include "palcomb/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

// Everything in here recomputes its predicates from first principles on raw
// symbol sequences; the one permitted dependency is the Word value type.

namespace palcomb::oracle {

namespace {

bool naive_palindrome(const Word& w, std::size_t pos, std::size_t len) {
  for (std::size_t i = 0; i < len / 2; ++i) {
    if (w[pos + i] != w[pos + len - 1 - i]) return false;
  }
  return true;
}

bool naive_antipalindrome(const Word& w, std::size_t pos, std::size_t len) {
  if (len % 2 != 0) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (w[pos + i] != 1 - w[pos + len - 1 - i]) return false;
  }
  return true;
}

bool naive_primitive(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) {
      repeats = w[i] == w[i - p];
    }
    if (repeats) return false;
  }
  return true;
}

bool naive_rotation_of(const Word& w, const Word& target) {
  const std::size_t n = w.size();
  if (target.size() != n) return false;
  if (n == 0) return true;
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = w[(i + r) % n] == target[i];
    }
    if (match) return true;
  }
  return false;
}

Word naive_reverse(const Word& w) {
  std::vector<Symbol> syms(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(syms), w.alphabet_size());
}

Word naive_complement(const Word& w) {
  std::vector<Symbol> syms;
  for (Symbol s : w.symbols()) syms.push_back(static_cast<Symbol>(1 - s));
  return Word(std::move(syms), w.alphabet_size());
}

// Splits into a palindrome pair with the given length parities (language
// level: the empty left part counts, so the empty word is an even pair).
bool naive_parity_pair(const Word& w, std::size_t parity) {
  const std::size_t n = w.size();
  for (std::size_t cut = 0; cut <= n; ++cut) {
    if (cut % 2 != parity || (n - cut) % 2 != parity) continue;
    if (naive_palindrome(w, 0, cut) && naive_palindrome(w, cut, n - cut)) {
      return true;
    }
  }
  return false;
}

bool naive_in_I(const Word& w) {
  std::vector<std::size_t> runs;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    runs.push_back(j - i);
    i = j;
  }
  for (std::size_t b = 0; b + 2 < runs.size(); ++b) {
    if (runs[b] > runs[b + 2]) return false;
  }
  return true;
}

bool naive_antipalstar(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (reach[i] && naive_antipalindrome(w, i, j - i)) {
        reach[j] = 1;
        break;
      }
    }
  }
  return reach[n] != 0;
}

std::uint64_t checked_total(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("bad enumeration range");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > kEnumerationBudget / static_cast<std::uint64_t>(k)) {
      throw std::length_error("enumeration budget exceeded (k^n > 2^30)");
    }
    total *= static_cast<std::uint64_t>(k);
  }
  return total;
}

bool require_binary_for(std::string_view predicate, int k) {
  if (k != 2) {
    throw std::invalid_argument(std::string(predicate) +
                                " is binary-only in brute_count");
  }
  return true;
}

using Predicate = std::function<bool(const Word&)>;

const std::map<std::string, Predicate, std::less<>>& predicate_registry() {
  static const std::map<std::string, Predicate, std::less<>> registry = {
      {"palindrome",
       [](const Word& w) { return naive_palindrome(w, 0, w.size()); }},
      {"antipalindrome",
       [](const Word& w) { return naive_antipalindrome(w, 0, w.size()); }},
      {"primitive-palindrome",
       [](const Word& w) {
         return !w.empty() && naive_palindrome(w, 0, w.size()) &&
                naive_primitive(w);
       }},
      {"palindrome-conjugate",
       [](const Word& w) {
         for (std::size_t r = 0; r < std::max<std::size_t>(w.size(), 1); ++r) {
           Word rot = w.rotated_left(r);
           if (naive_palindrome(rot, 0, rot.size())) return true;
         }
         return false;
       }},
      {"credible",
       [](const Word& w) { return naive_rotation_of(w, naive_reverse(w)); }},
      {"creaky",
       [](const Word& w) {
         return naive_rotation_of(w, naive_complement(naive_reverse(w)));
       }},
      {"even-pair", [](const Word& w) { return naive_parity_pair(w, 0); }},
      {"odd-pair", [](const Word& w) { return naive_parity_pair(w, 1); }},
      {"rich",
       [](const Word& w) {
         return brute_distinct_palindromic_factors(w).size() == w.size();
       }},
      {"a-rich",
       [](const Word& w) {
         return !w.empty() &&
                brute_distinct_palindromic_factors(w, true).size() ==
                    w.size() - 1;
       }},
      {"in-I", [](const Word& w) { return naive_in_I(w); }},
      {"antipalstar", [](const Word& w) { return naive_antipalstar(w); }},
  };
  return registry;
}

}  // namespace

WordRange::WordRange(int k, int n, Filter filter)
    : k_(k), n_(n), filter_(filter) {
  if (k < 1 || k > kMaxAlphabet || n < 0) {
    throw std::invalid_argument("bad enumeration range");
  }
  checked_total(k, n);
}

WordRange::iterator::iterator(int k, int n, Filter filter, bool done)
    : current_(std::vector<Symbol>(static_cast<std::size_t>(n), 0), k),
      filter_(filter),
      done_(done) {
  if (!done_ && !passes_filter()) ++(*this);
}

bool WordRange::iterator::passes_filter() const {
  switch (filter_) {
    case Filter::all:
      return true;
    case Filter::fixed_first:
      return current_.empty() || current_[0] == 0;
    case Filter::least_rotation: {
      for (std::size_t r = 1; r < current_.size(); ++r) {
        if (current_.rotated_left(r) < current_) return false;
      }
      return true;
    }
  }
  return true;
}

bool WordRange::iterator::advance_raw() {
  std::vector<Symbol> syms = current_.symbols();
  const int k = current_.alphabet_size();
  int pos = static_cast<int>(syms.size()) - 1;
  while (pos >= 0 && syms[static_cast<std::size_t>(pos)] == k - 1) {
    syms[static_cast<std::size_t>(pos)] = 0;
    --pos;
  }
  if (pos < 0) return false;
  ++syms[static_cast<std::size_t>(pos)];
  current_ = Word(std::move(syms), k);
  return true;
}

WordRange::iterator& WordRange::iterator::operator++() {
  do {
    if (!advance_raw()) {
      done_ = true;
      return *this;
    }
  } while (!passes_filter());
  return *this;
}

WordRange::iterator WordRange::begin() const {
  return iterator(k_, n_, filter_, false);
}

WordRange::iterator WordRange::end() const {
  return iterator(k_, n_, filter_, true);
}

std::set<Word> brute_distinct_palindromic_factors(const Word& w,
                                                  bool antipalindromic) {
  if (w.size() > kFactorScanCap) {
    throw std::length_error("factor scan refuses |w| > 64");
  }
  std::set<Word> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t len = 1; len <= w.size() - pos; ++len) {
      const bool hit = antipalindromic ? naive_antipalindrome(w, pos, len)
                                       : naive_palindrome(w, pos, len);
      if (hit) out.insert(w.factor(pos, len));
    }
  }
  return out;
}

std::vector<std::string> predicate_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : predicate_registry()) names.push_back(name);
  return names;
}

std::uint64_t brute_count(std::string_view predicate, int n, int k) {
  const auto& registry = predicate_registry();
  const auto it = registry.find(predicate);
  if (it == registry.end()) {
    throw std::invalid_argument("unknown predicate '" + std::string(predicate) +
                                "'");
  }
  if (predicate == "antipalindrome" || predicate == "creaky" ||
      predicate == "a-rich" || predicate == "antipalstar" ||
      predicate == "in-I") {
    require_binary_for(predicate, k);
  }
  std::uint64_t count = 0;
  for (const Word& w : WordRange(k, n)) {
    if (it->second(w)) ++count;
  }
  return count;
}

bool brute_longest_pal_suffix_unioccurrent(const Word& w) {
  if (w.size() > kFactorScanCap) {
    throw std::length_error("factor scan refuses |w| > 64");
  }
  for (std::size_t i = 1; i <= w.size(); ++i) {
    // longest palindromic suffix of w[0..i)
    std::size_t len = 0;
    for (std::size_t cand = i; cand >= 1; --cand) {
      if (naive_palindrome(w, i - cand, cand)) {
        len = cand;
        break;
      }
    }
    // count its occurrences inside w[0..i)
    std::size_t occurrences = 0;
    for (std::size_t pos = 0; pos + len <= i; ++pos) {
      bool match = true;
      for (std::size_t j = 0; j < len && match; ++j) {
        match = w[pos + j] == w[i - len + j];
      }
      if (match) ++occurrences;
    }
    if (occurrences != 1) return false;
  }
  return true;
}

}  // namespace palcomb::oracle
