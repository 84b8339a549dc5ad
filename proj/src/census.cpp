#include "palcomb/census.hpp"

#include <stdexcept>

#include "palcomb/antipal.hpp"
#include "palcomb/pal_pairs.hpp"
#include "palcomb/palindromes.hpp"
#include "palcomb/rich.hpp"

namespace palcomb {

namespace {

void require_binary_sequence(const std::string& sequence, int k) {
  if (k != 2) {
    throw std::invalid_argument("sequence '" + sequence +
                                "' is defined for the binary alphabet only");
  }
}

}  // namespace

std::vector<std::string> census_sequence_names() {
  return {"rich",   "lang-i",    "even-pairs", "odd-pairs",
          "creaky", "pal-pairs", "prim-pal",   "conj-pal"};
}

CensusTable compute_census(const std::string& sequence, int n_max, int k,
                           int threads, bool override_budget) {
  if (n_max < 1) throw std::invalid_argument("census needs n_max >= 1");
  CensusTable table;
  table.sequence_name = sequence;
  table.alphabet_size = k;
  table.generator_version = kGeneratorVersion;

  if (sequence == "rich") {
    require_binary_sequence(sequence, k);
    return census_rich(n_max, threads, override_budget);
  }
  if (sequence == "lang-i") {
    require_binary_sequence(sequence, k);
    return census_I(n_max);
  }
  if (sequence == "even-pairs") {
    table.zero_row = count_even_pairs(0, k);
    for (int n = 1; n <= n_max; ++n) table.rows[n] = count_even_pairs(n, k);
    return table;
  }
  if (sequence == "odd-pairs") {
    table.zero_row = count_odd_pairs(0, k);
    for (int n = 1; n <= n_max; ++n) table.rows[n] = count_odd_pairs(n, k);
    return table;
  }
  if (sequence == "creaky") {
    require_binary_sequence(sequence, k);
    table.zero_row = count_creaky(0);
    for (int n = 1; n <= n_max; ++n) table.rows[n] = count_creaky(n);
    return table;
  }
  if (sequence == "pal-pairs") {
    table.zero_row = count_pal_pairs(0, k);
    for (int n = 1; n <= n_max; ++n) table.rows[n] = count_pal_pairs(n, k);
    return table;
  }
  if (sequence == "prim-pal") {
    for (int n = 1; n <= n_max; ++n) {
      table.rows[n] = primitive_palindrome_count(k, n);
    }
    return table;
  }
  if (sequence == "conj-pal") {
    for (int n = 1; n <= n_max; ++n) {
      table.rows[n] = palindrome_conjugate_count(k, n);
    }
    return table;
  }
  throw std::invalid_argument("unknown sequence '" + sequence +
                              "'; known: rich, lang-i, even-pairs, odd-pairs, "
                              "creaky, pal-pairs, prim-pal, conj-pal");
}

}  // namespace palcomb
