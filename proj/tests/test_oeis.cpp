#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "palcomb/oeis.hpp"

using namespace palcomb;

namespace {

CensusTable sample_table() {
  CensusTable t;
  t.sequence_name = "rich";
  t.alphabet_size = 2;
  t.generator_version = kGeneratorVersion;
  t.zero_row = 1;
  t.rows[1] = 2;
  t.rows[2] = 4;
  t.rows[3] = 8;
  return t;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string("palcomb_test_") + name;
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("b-file parsing") {
  std::istringstream in("# comment\n0 1\n1 2\n\n2 4\n");
  const OeisBFile f = parse_bfile(in, "test");
  REQUIRE(f.entries.size() == 3);
  CHECK(f.entries.at(0) == 1);
  CHECK(f.entries.at(2) == 4);
}

TEST_CASE("b-file parse errors carry line numbers") {
  std::istringstream bad_value("0 1\n1 x2\n");
  CHECK_THROWS_WITH_AS(parse_bfile(bad_value), doctest::Contains("line 2"),
                       std::runtime_error);
  std::istringstream decreasing("5 1\n4 1\n");
  CHECK_THROWS_WITH_AS(parse_bfile(decreasing), doctest::Contains("line 2"),
                       std::runtime_error);
  std::istringstream trailing("0 1 junk\n");
  CHECK_THROWS_AS(parse_bfile(trailing), std::runtime_error);
}

TEST_CASE("table vs b-file comparison") {
  const CensusTable t = sample_table();
  std::istringstream in("0 1\n1 2\n2 4\n3 9\n");
  const OeisBFile f = parse_bfile(in);

  const CompareReport with_zero = compare_with_bfile(t, f, 0, true);
  CHECK(with_zero.lines.size() == 4);
  CHECK(with_zero.mismatches == 1);
  CHECK_FALSE(with_zero.lines.back().equal);
  CHECK(with_zero.render().find("DIFFER") != std::string::npos);

  const CompareReport capped = compare_with_bfile(t, f, 0, false, 2);
  CHECK(capped.lines.size() == 2);
  CHECK(capped.mismatches == 0);
}

TEST_CASE("comparison honors the offset") {
  CensusTable t = sample_table();
  std::istringstream in("11 2\n12 4\n13 8\n");
  const OeisBFile f = parse_bfile(in);
  const CompareReport shifted = compare_with_bfile(t, f, 10, false);
  CHECK(shifted.lines.size() == 3);
  CHECK(shifted.mismatches == 0);
}

TEST_CASE("csv rendering") {
  CHECK(to_csv(sample_table(), false) == "n,count\n1,2\n2,4\n3,8\n");
  CHECK(to_csv(sample_table(), true) == "n,count\n0,1\n1,2\n2,4\n3,8\n");
}

TEST_CASE("b-file rendering") {
  const std::string text = to_bfile_text(sample_table(), 0, true);
  CHECK(text.find("0 1\n1 2\n2 4\n3 8\n") != std::string::npos);
  CHECK(text.front() == '#');
}

TEST_CASE("json rendering round-trips") {
  const auto doc = nlohmann::json::parse(to_json_text(sample_table(), true));
  CHECK(doc["sequence"] == "rich");
  CHECK(doc["k"] == 2);
  REQUIRE(doc["rows"].size() == 4);
  CHECK(doc["rows"][0]["n"] == 0);
  CHECK(doc["rows"][3]["count"] == 8);
}

TEST_CASE("counts beyond 64 bits render as strings in json") {
  CensusTable t = sample_table();
  t.rows[4] = parse_u128("340282366920938463463374607431768211455");
  const auto doc = nlohmann::json::parse(to_json_text(t, false));
  CHECK(doc["rows"][3]["count"] ==
        "340282366920938463463374607431768211455");
}

TEST_CASE("b-file rendering parses back to the same rows") {
  const CensusTable t = sample_table();
  for (long long offset : {0LL, 3LL}) {
    std::istringstream in(to_bfile_text(t, offset, true));
    const OeisBFile parsed = parse_bfile(in);
    const CompareReport diff = compare_with_bfile(t, parsed, offset, true);
    CHECK(diff.lines.size() == 4);
    CHECK(diff.mismatches == 0);
  }
}

TEST_CASE("census cache round-trips") {
  TempFile tmp("cache_roundtrip");
  append_cache(tmp.path, {{{"rich", 2, 1}, 2}, {{"rich", 2, 2}, 4}});
  append_cache(tmp.path, {{{"rich", 2, 3}, 8}});
  const CacheMap cache = load_cache(tmp.path);
  REQUIRE(cache.size() == 3);
  CHECK(cache.at({"rich", 2, 3}) == 8);
}

TEST_CASE("cache corruption is detected") {
  TempFile tmp("cache_corrupt");
  append_cache(tmp.path, {{{"rich", 2, 1}, 2}});
  SUBCASE("tampered record") {
    std::string content;
    {
      std::ifstream in(tmp.path);
      std::getline(in, content, '\0');
    }
    content[content.find("rich 2 1 2") + 9] = '3';
    std::ofstream(tmp.path) << content;
    CHECK_THROWS_WITH_AS(load_cache(tmp.path), doctest::Contains("checksum"),
                         std::runtime_error);
  }
  SUBCASE("unterminated batch") {
    std::ofstream(tmp.path, std::ios::app) << "rich 2 5 32\n";
    CHECK_THROWS_WITH_AS(load_cache(tmp.path),
                         doctest::Contains("trailing batch"),
                         std::runtime_error);
  }
}

TEST_CASE("missing cache file reads as empty") {
  CHECK(load_cache("palcomb_test_definitely_missing.cache").empty());
}

TEST_CASE("128-bit renderings") {
  CHECK(to_string(u128{0}) == "0");
  CHECK(to_string(parse_u128("340282366920938463463374607431768211455")) ==
        "340282366920938463463374607431768211455");
  CHECK_THROWS_AS(parse_u128("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_u128("340282366920938463463374607431768211456"),
                  std::overflow_error);
}
