#include "palcomb/pal_pairs.hpp"

#include <stdexcept>

#include "palcomb/palindromes.hpp"

namespace palcomb {

namespace {

// E'(m) (parity = even) or O'(m) (parity = odd) for every even m <= n:
//   X'(m) = (m/2) * k^(m/2 [+1 for odd]) - sum over even 2d | m, 2d < m of
//           (m/2d) * X'(2d).
u128 even_primitive_pair_count(int n, int k, bool odd_parity) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("even-primitive pair counts need even n >= 2");
  }
  if (k < 1) throw std::invalid_argument("need k >= 1");
  std::vector<u128> table(static_cast<std::size_t>(n / 2) + 1, 0);
  for (int m = 2; m <= n; m += 2) {
    const unsigned e = static_cast<unsigned>(m / 2) + (odd_parity ? 1u : 0u);
    u128 value = checked_mul(static_cast<u128>(m / 2),
                             checked_pow(static_cast<u128>(k), e));
    for (int d2 = 2; d2 < m; d2 += 2) {
      if (m % d2 != 0) continue;
      const u128 contribution =
          checked_mul(static_cast<u128>(m / d2), table[d2 / 2]);
      if (contribution > value) {
        throw std::logic_error("pair-count recurrence went negative");
      }
      value -= contribution;
    }
    table[m / 2] = value;
  }
  return table[n / 2];
}

u128 pair_count(int n, int k, bool odd_parity) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n == 0) return odd_parity ? 0 : 1;
  if (n % 2 != 0) return 0;
  u128 total = 0;
  for (int d2 = 2; d2 <= n; d2 += 2) {
    if (n % d2 != 0) continue;
    total = checked_add(total, even_primitive_pair_count(d2, k, odd_parity));
  }
  return total;
}

}  // namespace

bool is_credible(const Word& w) {
  if (w.empty()) return true;
  const Word rev = reverse(w);
  const std::size_t n = w.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = w[(i + r) % n] == rev[i];
    }
    if (match) return true;
  }
  return false;
}

std::vector<Factorization> pal_factorizations(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("factorization needs a nonempty word");
  }
  std::vector<Factorization> out;
  const std::size_t n = w.size();
  for (std::size_t cut = 0; cut < n; ++cut) {
    if (is_palindrome_range(w, 0, cut) && is_palindrome_range(w, cut, n - cut)) {
      out.push_back({w.prefix(cut), w.factor(cut, n - cut)});
    }
  }
  return out;
}

PairParity pair_parity(const Word& w) {
  if (w.empty() || w.size() % 2 != 0) return PairParity::none;
  bool even = false, odd = false;
  const std::size_t n = w.size();
  for (std::size_t cut = 0; cut < n; ++cut) {
    if (is_palindrome_range(w, 0, cut) && is_palindrome_range(w, cut, n - cut)) {
      (cut % 2 == 0 ? even : odd) = true;
    }
  }
  if (even && odd) return PairParity::both;
  if (even) return PairParity::even;
  if (odd) return PairParity::odd;
  return PairParity::none;
}

u128 split_count(int n, int i, int k) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("split_count needs even n >= 2");
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (i < 0 || i >= n) throw std::invalid_argument("split position out of range");
  const unsigned e = static_cast<unsigned>(n / 2) + (i % 2 == 1 ? 1u : 0u);
  return checked_pow(static_cast<u128>(k), e);
}

u128 count_even_prim(int n, int k) { return even_primitive_pair_count(n, k, false); }

u128 count_odd_prim(int n, int k) { return even_primitive_pair_count(n, k, true); }

u128 count_even_pairs(int n, int k) { return pair_count(n, k, false); }

u128 count_odd_pairs(int n, int k) { return pair_count(n, k, true); }

std::uint64_t count_pal_pairs(int n, int k) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (k < 1 || k > kMaxAlphabet) throw std::invalid_argument("bad alphabet");
  if (n == 0) return 1;
  double size = 1;
  for (int i = 0; i < n; ++i) size *= k;
  if (size > static_cast<double>(std::uint64_t{1} << 30)) {
    throw std::length_error("enumeration budget exceeded (k^n > 2^30)");
  }
  if (k == 2 && n <= 30) {
    // Bitwise walk: w is credible iff its reversal is one of its rotations.
    const std::uint32_t mask =
        n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    std::uint64_t count = 0;
    for (std::uint32_t bits = 0;; ++bits) {
      std::uint32_t rev = 0;
      for (int i = 0; i < n; ++i) rev |= ((bits >> i) & 1u) << (n - 1 - i);
      for (int r = 0; r < n; ++r) {
        const std::uint32_t rot =
            ((bits >> r) | (bits << (n - r))) & mask;
        if (rot == rev) {
          ++count;
          break;
        }
      }
      if (bits == mask) break;
    }
    return count;
  }
  std::uint64_t count = 0;
  std::vector<Symbol> syms(static_cast<std::size_t>(n), 0);
  while (true) {
    if (is_credible(Word(syms, k))) ++count;
    int pos = n - 1;
    while (pos >= 0 && syms[static_cast<std::size_t>(pos)] == k - 1) {
      syms[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++syms[static_cast<std::size_t>(pos)];
  }
  return count;
}

}  // namespace palcomb
