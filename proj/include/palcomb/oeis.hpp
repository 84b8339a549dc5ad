#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "palcomb/census.hpp"
#include "palcomb/int128.hpp"

namespace palcomb {

// A parsed OEIS b-file: "index value" lines, '#' comments ignored, indices
// strictly increasing.
struct OeisBFile {
  std::string id;
  std::map<long long, u128> entries;
};

OeisBFile parse_bfile(std::istream& in, const std::string& id = "");
OeisBFile load_bfile(const std::string& path);

struct CompareLine {
  long long index;
  u128 computed;
  u128 filed;
  bool equal;
};

struct CompareReport {
  std::vector<CompareLine> lines;
  int mismatches = 0;
  long long offset = 0;
  bool zero_row_included = false;
  std::string render() const;
};

// Diffs a census table against a b-file over the overlap of their ranges.
// A table row n is matched to file index n + offset; the n = 0 row joins
// only when asked (OEIS offsets differ per sequence, so the reconciliation
// is explicit).
CompareReport compare_with_bfile(const CensusTable& table,
                                 const OeisBFile& bfile, long long offset,
                                 bool include_zero_row, int n_max = -1);

// ---- output formats ----

std::string to_csv(const CensusTable& table, bool with_zero_row);
std::string to_bfile_text(const CensusTable& table, long long offset,
                          bool with_zero_row);
std::string to_json_text(const CensusTable& table, bool with_zero_row);

// ---- on-disk census cache ----
//
// Append-only text file of "sequence k n count" records; each appended batch
// ends with a "checksum <hex>" line over the batch's record text. Corruption
// (bad line, bad checksum, unterminated batch) is an error on load.

struct CacheKey {
  std::string sequence;
  int k;
  int n;
  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

using CacheMap = std::map<CacheKey, u128>;

CacheMap load_cache(const std::string& path);  // missing file -> empty map
void append_cache(const std::string& path,
                  const std::vector<std::pair<CacheKey, u128>>& records);

}  // namespace palcomb
