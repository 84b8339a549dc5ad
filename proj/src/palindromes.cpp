#include "palcomb/palindromes.hpp"

#include <stdexcept>

namespace palcomb {

bool is_palindrome_range(const Word& w, std::size_t pos, std::size_t len) {
  for (std::size_t i = 0; i + i + 1 < len; ++i) {
    if (w[pos + i] != w[pos + len - 1 - i]) return false;
  }
  return true;
}

bool is_palindrome(const Word& w) { return is_palindrome_range(w, 0, w.size()); }

ClassPalindromeReport analyze_conjugacy_class(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("conjugacy analysis needs a nonempty word");
  }
  ClassPalindromeReport report;
  for (const Word& c : conjugates(w)) {
    if (is_palindrome(c)) report.palindromes.insert(c);
  }
  report.palindrome_count = static_cast<int>(report.palindromes.size());
  if (report.palindrome_count > 2) {
    throw std::logic_error("conjugacy class with more than two palindromes: " +
                           w.str());
  }
  if (report.palindrome_count == 2) {
    // The class is that of (x x^R)^i with x x^R primitive; recover x as the
    // first half of the primitive root of either palindromic member. The
    // root of a palindrome is a palindrome, so its halves mirror each other.
    const Word& p = *report.palindromes.begin();
    auto [root, exponent] = primitive_decomposition(p);
    if (root.size() % 2 != 0) {
      throw std::logic_error("two-palindrome class with odd primitive root: " +
                             w.str());
    }
    Word x = root.prefix(root.size() / 2);
    Word xxr = x + reverse(x);
    Word xrx = reverse(x) + x;
    if (primitive_decomposition(xxr).exponent != 1 ||
        !report.palindromes.contains(xxr.repeated(exponent)) ||
        !report.palindromes.contains(xrx.repeated(exponent))) {
      throw std::logic_error("witness reconstruction failed for " + w.str());
    }
    report.structure_witness = {std::move(x), exponent};
  }
  return report;
}

u128 primitive_palindrome_count(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
  __int128 acc = 0;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const unsigned e = (static_cast<unsigned>(n) / d + 1) / 2;
    const u128 term = checked_pow(static_cast<u128>(k), e);
    if (term > static_cast<u128>(~__int128{0} >> 1)) {
      throw std::overflow_error("primitive palindrome count overflow");
    }
    acc += mu * static_cast<__int128>(term);
  }
  if (acc < 0) throw std::logic_error("negative primitive palindrome count");
  return static_cast<u128>(acc);
}

u128 palindrome_conjugate_count(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
  u128 total = 0;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    const u128 weight = (d % 2 == 1) ? d : d / 2;
    total = checked_add(
        total, checked_mul(weight, primitive_palindrome_count(
                                       k, static_cast<int>(d))));
  }
  return total;
}

}  // namespace palcomb
