#include "palcomb/oeis.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace palcomb {

namespace {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

OeisBFile parse_bfile(std::istream& in, const std::string& id) {
  OeisBFile out;
  out.id = id;
  std::string line;
  long long line_no = 0;
  bool have_prev = false;
  long long prev_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long index;
    std::string value;
    if (!(fields >> index >> value)) {
      throw std::runtime_error("b-file line " + std::to_string(line_no) +
                               ": expected \"index value\"");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::runtime_error("b-file line " + std::to_string(line_no) +
                               ": trailing content");
    }
    if (have_prev && index <= prev_index) {
      throw std::runtime_error("b-file line " + std::to_string(line_no) +
                               ": indices must be strictly increasing");
    }
    u128 parsed;
    try {
      parsed = parse_u128(value);
    } catch (const std::exception&) {
      throw std::runtime_error("b-file line " + std::to_string(line_no) +
                               ": bad value '" + value + "'");
    }
    out.entries[index] = parsed;
    prev_index = index;
    have_prev = true;
  }
  return out;
}

OeisBFile load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file '" + path + "'");
  return parse_bfile(in, path);
}

CompareReport compare_with_bfile(const CensusTable& table,
                                 const OeisBFile& bfile, long long offset,
                                 bool include_zero_row, int n_max) {
  CompareReport report;
  report.offset = offset;
  report.zero_row_included = include_zero_row && table.zero_row.has_value();
  auto consider = [&](long long n, u128 computed) {
    if (n_max >= 0 && n > n_max) return;
    const auto it = bfile.entries.find(n + offset);
    if (it == bfile.entries.end()) return;
    const bool equal = it->second == computed;
    report.lines.push_back({n + offset, computed, it->second, equal});
    if (!equal) ++report.mismatches;
  };
  if (report.zero_row_included) consider(0, *table.zero_row);
  for (const auto& [n, count] : table.rows) consider(n, count);
  return report;
}

std::string CompareReport::render() const {
  std::ostringstream out;
  out << "offset reconciliation: table row n maps to b-file index n";
  if (offset > 0) out << "+" << offset;
  if (offset < 0) out << offset;
  out << "; n=0 row " << (zero_row_included ? "included" : "excluded") << "\n";
  for (const auto& line : lines) {
    out << line.index << " computed=" << to_string(line.computed)
        << " file=" << to_string(line.filed)
        << (line.equal ? " EQUAL" : " DIFFER") << "\n";
  }
  out << (mismatches == 0 ? "all entries equal" :
                            std::to_string(mismatches) + " mismatch(es)")
      << " over " << lines.size() << " compared\n";
  return out.str();
}

std::string to_csv(const CensusTable& table, bool with_zero_row) {
  std::ostringstream out;
  out << "n,count\n";
  if (with_zero_row && table.zero_row) {
    out << 0 << "," << to_string(*table.zero_row) << "\n";
  }
  for (const auto& [n, count] : table.rows) {
    out << n << "," << to_string(count) << "\n";
  }
  return out.str();
}

std::string to_bfile_text(const CensusTable& table, long long offset,
                          bool with_zero_row) {
  std::ostringstream out;
  out << "# " << table.sequence_name << " (k=" << table.alphabet_size
      << "), generated by " << table.generator_version << "\n";
  if (with_zero_row && table.zero_row) {
    out << offset << " " << to_string(*table.zero_row) << "\n";
  }
  for (const auto& [n, count] : table.rows) {
    out << n + offset << " " << to_string(count) << "\n";
  }
  return out.str();
}

std::string to_json_text(const CensusTable& table, bool with_zero_row) {
  nlohmann::json rows = nlohmann::json::array();
  auto value_of = [](u128 v) -> nlohmann::json {
    if (v <= static_cast<u128>(~std::uint64_t{0})) {
      return static_cast<std::uint64_t>(v);
    }
    return to_string(v);
  };
  if (with_zero_row && table.zero_row) {
    rows.push_back({{"n", 0}, {"count", value_of(*table.zero_row)}});
  }
  for (const auto& [n, count] : table.rows) {
    rows.push_back({{"n", n}, {"count", value_of(count)}});
  }
  nlohmann::json doc = {{"sequence", table.sequence_name},
                        {"k", table.alphabet_size},
                        {"generator", table.generator_version},
                        {"rows", rows}};
  return doc.dump(2) + "\n";
}

CacheMap load_cache(const std::string& path) {
  CacheMap cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  long long line_no = 0;
  std::string batch_text;
  bool batch_open = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string first;
    fields >> first;
    if (first == "checksum") {
      std::string stated;
      if (!(fields >> stated)) {
        throw std::runtime_error("cache corrupted at line " +
                                 std::to_string(line_no) +
                                 ": checksum line without value");
      }
      if (stated != hex64(fnv1a64(batch_text))) {
        throw std::runtime_error("cache corrupted at line " +
                                 std::to_string(line_no) +
                                 ": checksum mismatch");
      }
      batch_text.clear();
      batch_open = false;
      continue;
    }
    int k, n;
    std::string count;
    if (!(fields >> k >> n >> count)) {
      throw std::runtime_error("cache corrupted at line " +
                               std::to_string(line_no) + ": bad record");
    }
    u128 parsed;
    try {
      parsed = parse_u128(count);
    } catch (const std::exception&) {
      throw std::runtime_error("cache corrupted at line " +
                               std::to_string(line_no) + ": bad count");
    }
    cache[{first, k, n}] = parsed;
    batch_text += line;
    batch_text += '\n';
    batch_open = true;
  }
  if (batch_open) {
    throw std::runtime_error(
        "cache corrupted: trailing batch without checksum line");
  }
  return cache;
}

void append_cache(const std::string& path,
                  const std::vector<std::pair<CacheKey, u128>>& records) {
  if (records.empty()) return;
  std::ostringstream batch;
  for (const auto& [key, count] : records) {
    batch << key.sequence << " " << key.k << " " << key.n << " "
          << to_string(count) << "\n";
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache '" + path + "'");
  out << batch.str() << "checksum " << hex64(fnv1a64(batch.str())) << "\n";
}

}  // namespace palcomb
