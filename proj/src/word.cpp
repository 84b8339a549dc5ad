#include "palcomb/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace palcomb {

namespace {

void check_alphabet(int k) {
  if (k < 1 || k > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [1, 36]");
  }
}

char render_symbol(Symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10);
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, int alphabet_size)
    : syms_(std::move(symbols)), k_(static_cast<std::uint8_t>(alphabet_size)) {
  check_alphabet(alphabet_size);
  for (Symbol s : syms_) {
    if (s >= k_) throw std::invalid_argument("symbol outside alphabet");
  }
}

Word Word::from_string(std::string_view text, int alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (char c : text) {
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'z') {
      v = c - 'a' + 10;
    } else {
      throw std::invalid_argument(std::string("unparseable character '") + c +
                                  "'");
    }
    if (v >= alphabet_size) {
      throw std::invalid_argument(std::string("character '") + c +
                                  "' outside the declared alphabet");
    }
    syms.push_back(static_cast<Symbol>(v));
  }
  return Word(std::move(syms), alphabet_size);
}

Word Word::from_letters(std::string_view text, int alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(std::string("unparseable character '") + c +
                                  "'");
    }
    int v = c - 'a';
    if (v >= alphabet_size) {
      throw std::invalid_argument(std::string("character '") + c +
                                  "' outside the declared alphabet");
    }
    syms.push_back(static_cast<Symbol>(v));
  }
  return Word(std::move(syms), alphabet_size);
}

std::string Word::str() const {
  std::string out;
  out.reserve(syms_.size());
  for (Symbol s : syms_) out.push_back(render_symbol(s));
  return out;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw std::out_of_range("factor out of range");
  }
  Word out;
  out.k_ = k_;
  out.syms_.assign(syms_.begin() + static_cast<std::ptrdiff_t>(pos),
                   syms_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

Word Word::rotated_left(std::size_t r) const {
  if (empty()) return *this;
  r %= size();
  Word out;
  out.k_ = k_;
  out.syms_.reserve(size());
  out.syms_.insert(out.syms_.end(), syms_.begin() + static_cast<std::ptrdiff_t>(r),
                   syms_.end());
  out.syms_.insert(out.syms_.end(), syms_.begin(),
                   syms_.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

Word Word::repeated(int times) const {
  if (times < 0) throw std::invalid_argument("negative exponent");
  Word out;
  out.k_ = k_;
  out.syms_.reserve(size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) {
    out.syms_.insert(out.syms_.end(), syms_.begin(), syms_.end());
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("alphabet mismatch");
  Word out;
  out.k_ = a.k_;
  out.syms_.reserve(a.size() + b.size());
  out.syms_.insert(out.syms_.end(), a.syms_.begin(), a.syms_.end());
  out.syms_.insert(out.syms_.end(), b.syms_.begin(), b.syms_.end());
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.syms_ <=> b.syms_; c != 0) return c;
  return a.k_ <=> b.k_;
}

Word reverse(const Word& w) {
  std::vector<Symbol> syms(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(syms), w.alphabet_size());
}

Word negate(const Word& w) {
  if (w.alphabet_size() != 2) {
    throw std::invalid_argument("negate is defined for binary words only");
  }
  std::vector<Symbol> syms;
  syms.reserve(w.size());
  for (Symbol s : w.symbols()) syms.push_back(static_cast<Symbol>(1 - s));
  return Word(std::move(syms), 2);
}

Word perfect_shuffle(const Word& v, const Word& w) {
  if (v.alphabet_size() != w.alphabet_size()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  if (v.size() != w.size()) {
    throw std::invalid_argument("perfect shuffle needs equal lengths");
  }
  std::vector<Symbol> syms;
  syms.reserve(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    syms.push_back(v[i]);
    syms.push_back(w[i]);
  }
  return Word(std::move(syms), v.alphabet_size());
}

std::set<Word> conjugates(const Word& w) {
  std::set<Word> out;
  if (w.empty()) {
    out.insert(w);
    return out;
  }
  for (std::size_t r = 0; r < w.size(); ++r) out.insert(w.rotated_left(r));
  return out;
}

std::size_t min_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word has no period");
  const std::size_t n = w.size();
  // border[i] = length of the longest proper border of w[0..i)
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i];
    while (b > 0 && w[i] != w[b]) b = border[b];
    border[i + 1] = (w[i] == w[b]) ? b + 1 : 0;
  }
  return n - border[n];
}

PrimitiveDecomposition primitive_decomposition(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("empty word has no primitive decomposition");
  }
  const std::size_t n = w.size();
  const std::size_t p = min_period(w);
  if (n % p == 0) {
    return {w.prefix(p), static_cast<int>(n / p)};
  }
  return {w, 1};
}

bool is_even_primitive(const Word& w) {
  if (w.empty() || w.size() % 2 != 0) {
    throw std::invalid_argument("even-primitivity needs even nonzero length");
  }
  auto [root, m] = primitive_decomposition(w);
  // Not a power of a shorter even-length word: either primitive, or the
  // square of an odd-length primitive root.
  return m == 1 || (m == 2 && root.size() % 2 == 1);
}

RunLengthEncoding run_length_encode(const Word& w) {
  RunLengthEncoding rle;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    rle.blocks.push_back({w[i], j - i});
    i = j;
  }
  return rle;
}

Word run_length_decode(const RunLengthEncoding& rle, int alphabet_size) {
  std::vector<Symbol> syms;
  for (const auto& b : rle.blocks) {
    syms.insert(syms.end(), b.run, b.symbol);
  }
  return Word(std::move(syms), alphabet_size);
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0) is undefined");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors(0) is undefined");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace palcomb
