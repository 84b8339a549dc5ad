// Command-line surface: censuses, word classification, exhaustive
// verification suites, the rich-vs-n^sqrt(n) table, and OEIS b-file diffs.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "palcomb/antipal.hpp"
#include "palcomb/census.hpp"
#include "palcomb/oeis.hpp"
#include "palcomb/pal_pairs.hpp"
#include "palcomb/palindromes.hpp"
#include "palcomb/rich.hpp"
#include "palcomb/verify.hpp"

namespace {

using namespace palcomb;

std::string default_cache_path() {
  if (const char* dir = std::getenv("PALCOMB_CACHE_DIR")) {
    return std::string(dir) + "/census.cache";
  }
  return "";
}

std::string quoted(const Word& w) { return "'" + w.str() + "'"; }

Word parse_word_flexible(const std::string& text, int k) {
  try {
    return Word::from_string(text, k);
  } catch (const std::invalid_argument&) {
    return Word::from_letters(text, k);
  }
}

// Serves a census from the cache when every requested row is present,
// otherwise computes and appends the new rows.
CensusTable cached_census(const std::string& sequence, int n_max, int k,
                          int threads, bool override_budget,
                          const std::string& cache_path) {
  if (cache_path.empty()) {
    return compute_census(sequence, n_max, k, threads, override_budget);
  }
  CacheMap cache = load_cache(cache_path);
  bool complete = true;
  for (int n = 1; n <= n_max && complete; ++n) {
    complete = cache.contains({sequence, k, n});
  }
  if (complete) {
    CensusTable table;
    table.sequence_name = sequence;
    table.alphabet_size = k;
    table.generator_version = kGeneratorVersion;
    for (int n = 1; n <= n_max; ++n) table.rows[n] = cache.at({sequence, k, n});
    if (const auto it = cache.find({sequence, k, 0}); it != cache.end()) {
      table.zero_row = it->second;
    }
    return table;
  }
  CensusTable table =
      compute_census(sequence, n_max, k, threads, override_budget);
  std::vector<std::pair<CacheKey, u128>> fresh;
  if (table.zero_row && !cache.contains({sequence, k, 0})) {
    fresh.push_back({{sequence, k, 0}, *table.zero_row});
  }
  for (const auto& [n, count] : table.rows) {
    if (!cache.contains({sequence, k, n})) {
      fresh.push_back({{sequence, k, n}, count});
    }
  }
  append_cache(cache_path, fresh);
  return table;
}

int cmd_census(const std::string& sequence, int n_max, int k, int threads,
               const std::string& format, const std::string& cache_path,
               bool override_budget, bool with_zero_row, long long offset) {
  const CensusTable table =
      cached_census(sequence, n_max, k, threads, override_budget, cache_path);
  if (format == "csv") {
    std::cout << to_csv(table, with_zero_row);
  } else if (format == "json") {
    std::cout << to_json_text(table, with_zero_row);
  } else if (format == "bfile") {
    std::cout << to_bfile_text(table, offset, with_zero_row);
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  return 0;
}

int cmd_check(const std::string& text, int k) {
  const Word w = parse_word_flexible(text, k);
  const bool binary = w.alphabet_size() == 2;
  std::cout << "word: " << quoted(w) << " (length " << w.size() << ", alphabet "
            << w.alphabet_size() << ")\n";
  std::cout << "palindrome: " << (is_palindrome(w) ? "yes" : "no") << "\n";
  std::cout << "antipalindrome: "
            << (binary ? (is_antipalindrome(w) ? "yes" : "no") : "n/a") << "\n";
  std::cout << "credible (product of two palindromes): "
            << (is_credible(w) ? "yes" : "no") << "\n";
  std::cout << "creaky (product of two antipalindromes): "
            << (binary ? (is_creaky(w) ? "yes" : "no") : "n/a") << "\n";
  std::cout << "rich: " << (is_rich(w) ? "yes" : "no") << "\n";
  if (binary && !w.empty()) {
    const bool a_rich =
        antipal_factor_count(w) == static_cast<std::uint64_t>(w.size()) - 1;
    std::cout << "a-rich: " << (a_rich ? "yes" : "no") << "\n";
  } else {
    std::cout << "a-rich: " << (binary ? "yes" : "n/a") << "\n";
  }
  std::cout << "language I: " << (in_language_I(w) ? "yes" : "no") << "\n";

  if (!w.empty()) {
    const auto facts = pal_factorizations(w);
    std::cout << "palindromic factorizations (" << facts.size() << "):";
    for (const auto& f : facts) {
      std::cout << " (" << quoted(f.left) << "," << quoted(f.right) << ")";
    }
    std::cout << "\n";
    const auto report = analyze_conjugacy_class(w);
    std::cout << "conjugacy class palindromes (" << report.palindrome_count
              << "):";
    for (const auto& p : report.palindromes) std::cout << " " << quoted(p);
    if (report.structure_witness) {
      std::cout << "  witness x=" << quoted(report.structure_witness->first)
                << " i=" << report.structure_witness->second;
    }
    std::cout << "\n";
    if (binary) {
      const auto creaky_facts = creaky_factorizations(w);
      std::cout << "creaky factorizations (" << creaky_facts.size() << "):";
      for (const auto& f : creaky_facts) {
        std::cout << " (" << quoted(f.left) << "," << quoted(f.right) << ")";
      }
      std::cout << "\n";
      if (is_antipalstar(w)) {
        const auto prime = prime_antipalstar_factorization(w);
        std::cout << "prime antipalstar factorization:";
        for (const auto& f : prime.factors) std::cout << " " << quoted(f);
        std::cout << "\n";
      } else {
        std::cout << "prime antipalstar factorization: n/a (not an "
                     "antipalstar)\n";
      }
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_n) {
  const VerifyResult result = run_verify_suite(suite, max_n);
  if (result.ok) {
    std::cout << "PASS " << result.suite << ": " << result.detail << "\n";
    return 0;
  }
  std::cout << "FAIL " << result.suite << ": " << result.detail;
  if (!result.counterexample.empty()) {
    std::cout << " (counterexample: " << result.counterexample << ")";
  }
  std::cout << "\n";
  return 1;
}

int cmd_table1(int n_max, int threads, const std::string& cache_path,
               bool override_budget) {
  const CensusTable table =
      cached_census("rich", n_max, 2, threads, override_budget, cache_path);
  std::cout << "n,C_R(n),n^sqrt(n),ratio,C_R(n)^(1/n),C_R(n)/C_R(n-1)\n";
  std::cout.precision(6);
  for (int n = 1; n <= n_max; ++n) {
    const double cr = to_double(table.rows.at(n));
    const double limit = n_pow_sqrt_n(n);
    std::ostringstream row;
    row.precision(6);
    row << n << "," << to_string(table.rows.at(n)) << "," << limit << ","
        << cr / limit << "," << std::pow(cr, 1.0 / n) << ",";
    if (n > 1) {
      row << cr / to_double(table.rows.at(n - 1));
    } else {
      row << "-";
    }
    std::cout << row.str() << "\n";
  }
  return 0;
}

int cmd_oeis_compare(const std::string& sequence, const std::string& path,
                     int n_max, long long offset, bool with_zero_row, int k,
                     int threads, const std::string& cache_path,
                     bool override_budget) {
  const OeisBFile bfile = load_bfile(path);
  if (bfile.entries.empty()) {
    throw std::runtime_error("b-file '" + path + "' holds no entries");
  }
  if (n_max < 0) {
    // Default to the file's range, capped where enumeration gets expensive.
    long long file_max = bfile.entries.rbegin()->first - offset;
    long long cap = 1000;
    if (sequence == "rich") cap = kRichCensusBudget;
    if (sequence == "creaky") cap = 24;
    if (sequence == "pal-pairs") cap = 22;
    if (sequence == "lang-i") cap = 128;
    n_max = static_cast<int>(std::min(file_max, cap));
  }
  const CensusTable table =
      cached_census(sequence, n_max, k, threads, override_budget, cache_path);
  const CompareReport report =
      compare_with_bfile(table, bfile, offset, with_zero_row, n_max);
  std::cout << "sequence " << sequence << " vs " << path << "\n"
            << report.render();
  return report.mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palcomb: palindrome and antipalindrome combinatorics"};
  app.require_subcommand(1);

  std::string sequence, format = "csv", cache_path = default_cache_path();
  std::string word_text, suite, bfile_path;
  int n_max = 20, k = 2, threads = 1, max_n = 0, compare_n_max = -1;
  long long offset = 0;
  bool override_budget = false, with_zero_row = false;

  auto* census = app.add_subcommand("census", "count a sequence");
  census->add_option("sequence", sequence, "one of: rich, lang-i, even-pairs, "
                                           "odd-pairs, creaky, pal-pairs, "
                                           "prim-pal, conj-pal")
      ->required();
  census->add_option("--n-max", n_max, "largest length to count");
  census->add_option("--k", k, "alphabet size");
  census->add_option("--threads", threads, "worker threads");
  census->add_option("--format", format, "csv, json or bfile");
  census->add_option("--cache", cache_path, "append-only census cache file");
  census->add_flag("--override-budget", override_budget,
                   "lift the resource refusal");
  census->add_flag("--with-zero-row", with_zero_row, "emit the n=0 row");
  census->add_option("--offset", offset, "b-file index offset");

  auto* check = app.add_subcommand("check", "classify one word");
  check->add_option("word", word_text, "word over the alphabet (may be empty)")
      ->required();
  check->add_option("--k", k, "alphabet size");

  auto* verify = app.add_subcommand("verify", "run an exhaustive suite");
  verify->add_option("suite", suite, "theorem1, theorem4, theorem5, theorem6, "
                                     "theorem8, theorem9, theorem10, "
                                     "theorem12, theorem13 or propositions")
      ->required();
  verify->add_option("--max-n", max_n, "length bound (0 = suite default)");

  auto* table1 = app.add_subcommand("table1",
                                    "rich census against n^sqrt(n)");
  table1->add_option("--n-max", n_max, "largest length");
  table1->add_option("--threads", threads, "worker threads");
  table1->add_option("--cache", cache_path, "census cache file");
  table1->add_flag("--override-budget", override_budget,
                   "lift the resource refusal");

  auto* oeis = app.add_subcommand("oeis-compare",
                                  "diff a census against a local b-file");
  oeis->add_option("sequence", sequence, "census sequence name")->required();
  oeis->add_option("bfile", bfile_path, "path to the b-file")->required();
  oeis->add_option("--n-max", compare_n_max, "largest length to compare");
  oeis->add_option("--offset", offset, "file index of table row 0");
  oeis->add_flag("--with-zero-row", with_zero_row,
                 "include the n=0 row in the diff");
  oeis->add_option("--k", k, "alphabet size");
  oeis->add_option("--threads", threads, "worker threads");
  oeis->add_option("--cache", cache_path, "census cache file");
  oeis->add_flag("--override-budget", override_budget,
                 "lift the resource refusal");

  CLI11_PARSE(app, argc, argv);

  try {
    if (census->parsed()) {
      return cmd_census(sequence, n_max, k, threads, format, cache_path,
                        override_budget, with_zero_row, offset);
    }
    if (check->parsed()) return cmd_check(word_text, k);
    if (verify->parsed()) return cmd_verify(suite, max_n);
    if (table1->parsed()) {
      return cmd_table1(n_max, threads, cache_path, override_budget);
    }
    if (oeis->parsed()) {
      return cmd_oeis_compare(sequence, bfile_path, compare_n_max, offset,
                              with_zero_row, k, threads, cache_path,
                              override_budget);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
