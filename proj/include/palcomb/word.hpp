#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace palcomb {

using Symbol = std::uint8_t;

inline constexpr int kMaxAlphabet = 36;

// A finite word over a k-letter alphabet. Symbols are small integers in
// [0, k); rendering as characters (0-9 then a-z) is a presentation concern.
// Words are immutable values after construction and safe to share across
// threads.
class Word {
 public:
  Word() = default;  // empty binary word
  Word(std::vector<Symbol> symbols, int alphabet_size);

  // Parses the canonical rendering: '0'..'9' -> 0..9, 'a'..'z' -> 10..35.
  // Characters outside the declared alphabet are rejected.
  static Word from_string(std::string_view text, int alphabet_size = 2);
  // Parses letter words with 'a' -> 0, 'b' -> 1, ...; used by the CLI so
  // inputs like "aabaab" work over a 2-letter alphabet.
  static Word from_letters(std::string_view text, int alphabet_size);

  int alphabet_size() const { return k_; }
  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  Symbol operator[](std::size_t i) const { return syms_[i]; }
  const std::vector<Symbol>& symbols() const { return syms_; }

  std::string str() const;

  Word factor(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return factor(0, len); }
  Word suffix(std::size_t len) const { return factor(size() - len, len); }
  Word rotated_left(std::size_t r) const;
  Word repeated(int times) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Symbol> syms_;
  std::uint8_t k_ = 2;
};

Word reverse(const Word& w);

// Bitwise complement of a binary word; errors on any other alphabet.
Word negate(const Word& w);

// v[1]w[1]v[2]w[2]...v[n]w[n]; both inputs must have equal length and
// alphabet.
Word perfect_shuffle(const Word& v, const Word& w);

// All distinct rotations of w.
std::set<Word> conjugates(const Word& w);

struct PrimitiveDecomposition {
  Word root;
  int exponent = 1;
};

// Smallest period of a nonempty word, via the border array.
std::size_t min_period(const Word& w);

// Unique (root, exponent) with w = root^exponent and root primitive.
PrimitiveDecomposition primitive_decomposition(const Word& w);

// True iff the even-length word w is not an integer power of a shorter
// even-length word. Errors on odd or empty input.
bool is_even_primitive(const Word& w);

struct RunLengthEncoding {
  struct Block {
    Symbol symbol;
    std::size_t run;
    friend bool operator==(const Block&, const Block&) = default;
  };
  std::vector<Block> blocks;
  friend bool operator==(const RunLengthEncoding&,
                         const RunLengthEncoding&) = default;
};

RunLengthEncoding run_length_encode(const Word& w);
Word run_length_decode(const RunLengthEncoding& rle, int alphabet_size);

// Moebius function; 0 on non-squarefree n, else (-1)^(#prime factors).
int mobius(std::uint64_t n);

// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace palcomb
