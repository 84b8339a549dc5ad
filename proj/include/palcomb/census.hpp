#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "palcomb/int128.hpp"

namespace palcomb {

// Exact (n -> count) rows for one named integer sequence. Rows cover the
// contiguous range 1..n_max; the n=0 value, when the sequence defines one,
// is carried separately so output formats can include or drop it.
struct CensusTable {
  std::string sequence_name;
  int alphabet_size = 2;
  std::map<int, u128> rows;
  std::optional<u128> zero_row;
  std::string generator_version;

  int max_n() const { return rows.empty() ? 0 : rows.rbegin()->first; }
};

inline constexpr const char* kGeneratorVersion = "palcomb 1.0";

// Names accepted by compute_census and the census CLI command.
std::vector<std::string> census_sequence_names();

// Dispatches to the sequence generators: rich, lang-i, even-pairs, odd-pairs,
// creaky, pal-pairs, prim-pal, conj-pal.
CensusTable compute_census(const std::string& sequence, int n_max, int k,
                           int threads, bool override_budget);

}  // namespace palcomb
