#include "palcomb/antipal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "palcomb/palindromes.hpp"

namespace palcomb {

namespace {

void require_binary(const Word& w) {
  if (w.alphabet_size() != 2) {
    throw std::invalid_argument("this operation is binary-only");
  }
}

// Negates every second letter. Self-inverse. Writing R for reversal, N for
// negation and T for this flip, (Tw)^R = N(T(w^R)) and T commutes with even
// rotations; so the complemented reversal of w is an even rotation of w
// exactly when the plain reversal of Tw is an even rotation of Tw. That
// makes T a bijection between creaky words and even palindromic pairs (and
// between antipalindromes and even-length palindromes, the rotation-0 case).
Word negate_alternate(const Word& w) {
  std::vector<Symbol> syms(w.symbols());
  for (std::size_t i = 1; i < syms.size(); i += 2) {
    syms[i] = static_cast<Symbol>(1 - syms[i]);
  }
  return Word(std::move(syms), 2);
}

// Positions reachable[j]: w[0..j) splits into nonempty antipalindromes.
std::vector<char> antipalstar_reachable(const Word& w) {
  const std::size_t n = w.size();
  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  for (std::size_t j = 2; j <= n; j += 2) {
    for (std::size_t i = j % 2; i < j; i += 2) {
      if (reachable[i] && is_antipalindrome_range(w, i, j - i)) {
        reachable[j] = 1;
        break;
      }
    }
  }
  return reachable;
}

}  // namespace

bool is_antipalindrome_range(const Word& w, std::size_t pos, std::size_t len) {
  if (len % 2 != 0) return false;
  for (std::size_t i = 0; i + i < len; ++i) {
    if (w[pos + i] == w[pos + len - 1 - i]) return false;
  }
  return true;
}

bool is_antipalindrome(const Word& w) {
  require_binary(w);
  return is_antipalindrome_range(w, 0, w.size());
}

bool is_antipalstar(const Word& w) {
  require_binary(w);
  if (w.empty()) return false;
  return antipalstar_reachable(w)[w.size()] != 0;
}

PrimeAntipalstarFactorization prime_antipalstar_factorization(const Word& w) {
  require_binary(w);
  if (w.empty()) {
    throw std::invalid_argument("the empty word is not an antipalstar");
  }
  // Prime antipalindromes form a prefix code, so stripping the shortest
  // nonempty antipalindromic prefix at each step is the unique factorization.
  PrimeAntipalstarFactorization result;
  std::size_t pos = 0;
  while (pos < w.size()) {
    std::size_t len = 0;
    for (std::size_t cand = 2; cand <= w.size() - pos; cand += 2) {
      if (is_antipalindrome_range(w, pos, cand)) {
        len = cand;
        break;
      }
    }
    if (len == 0) {
      throw std::invalid_argument(
          "not an antipalstar: no antipalindromic prefix at position " +
          std::to_string(pos));
    }
    result.factors.push_back(w.factor(pos, len));
    pos += len;
  }
  return result;
}

std::uint64_t antipal_factor_count(const Word& w) {
  require_binary(w);
  const std::size_t n = w.size();
  if (n <= 32) {
    // Bit-packed windows: a factor of length len starting at pos becomes
    // (len << 32) | bits, and the antipalindrome test is rev(x) == ~x.
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bits |= static_cast<std::uint64_t>(w[i]) << i;
    }
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t pos = 0; pos < n; ++pos) {
      for (std::size_t len = 2; len <= n - pos; len += 2) {
        const std::uint64_t sub =
            (bits >> pos) & ((std::uint64_t{1} << len) - 1);
        std::uint64_t rev = 0;
        for (std::size_t i = 0; i < len; ++i) {
          rev |= ((sub >> i) & 1u) << (len - 1 - i);
        }
        if ((rev ^ sub) == (std::uint64_t{1} << len) - 1) {
          seen.insert((static_cast<std::uint64_t>(len) << 32) | sub);
        }
      }
    }
    return seen.size();
  }
  std::set<Word> seen;
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t len = 2; len <= n - pos; len += 2) {
      if (is_antipalindrome_range(w, pos, len)) {
        seen.insert(w.factor(pos, len));
      }
    }
  }
  return seen.size();
}

std::vector<Word> a_rich_words(int n) {
  if (n < 1) throw std::invalid_argument("a-rich words need n >= 1");
  std::vector<Symbol> alternating01, alternating10;
  for (int i = 0; i < n; ++i) {
    alternating01.push_back(static_cast<Symbol>(i % 2));
    alternating10.push_back(static_cast<Symbol>(1 - i % 2));
  }
  std::vector<Word> out{Word(std::move(alternating01), 2),
                        Word(std::move(alternating10), 2)};
  for (const Word& w : out) {
    if (antipal_factor_count(w) != static_cast<std::uint64_t>(n - 1)) {
      throw std::logic_error("a-rich construction failed for " + w.str());
    }
  }
  return out;
}

bool is_creaky(const Word& w) {
  require_binary(w);
  if (w.empty()) return true;
  const Word target = negate(reverse(w));
  const std::size_t n = w.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = w[(i + r) % n] == target[i];
    }
    if (match) return true;
  }
  return false;
}

std::vector<Factorization> creaky_factorizations(const Word& w) {
  require_binary(w);
  if (w.empty()) {
    throw std::invalid_argument("factorization needs a nonempty word");
  }
  std::vector<Factorization> out;
  const std::size_t n = w.size();
  for (std::size_t cut = 0; cut < n; ++cut) {
    if (is_antipalindrome_range(w, 0, cut) &&
        is_antipalindrome_range(w, cut, n - cut)) {
      out.push_back({w.prefix(cut), w.factor(cut, n - cut)});
    }
  }
  return out;
}

Word creaky_to_even_pair(const Word& w) {
  require_binary(w);
  if (w.empty() || !is_creaky(w)) {
    throw std::invalid_argument("input must be a nonempty creaky word");
  }
  return negate_alternate(w);
}

Word even_pair_to_creaky(const Word& w) {
  require_binary(w);
  if (w.empty() || w.size() % 2 != 0) {
    throw std::invalid_argument("input must be a nonempty even-length word");
  }
  bool even_pair = false;
  const std::size_t n = w.size();
  for (std::size_t cut = 0; cut < n && !even_pair; cut += 2) {
    even_pair = is_palindrome_range(w, 0, cut) &&
                is_palindrome_range(w, cut, n - cut);
  }
  if (!even_pair) {
    throw std::invalid_argument("input is not an even palindromic pair");
  }
  return negate_alternate(w);
}

std::uint64_t count_creaky(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n == 0) return 1;
  if (n > 30) {
    throw std::length_error("enumeration budget exceeded (2^n > 2^30)");
  }
  std::uint64_t enumerated = 0;
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t bits = 0;; ++bits) {
    // reversed complement, then rotation match
    std::uint32_t target = 0;
    for (int i = 0; i < n; ++i) {
      target |= (((bits >> i) & 1u) ^ 1u) << (n - 1 - i);
    }
    for (int r = 0; r < n; ++r) {
      const std::uint32_t rot = ((bits >> r) | (bits << (n - r))) & mask;
      if (rot == target) {
        ++enumerated;
        break;
      }
    }
    if (bits == mask) break;
  }
  const u128 via_pairs = count_even_pairs(n, 2);
  if (via_pairs != static_cast<u128>(enumerated)) {
    throw std::logic_error("creaky enumeration disagrees with E(n,2) at n = " +
                           std::to_string(n));
  }
  return enumerated;
}

}  // namespace palcomb
