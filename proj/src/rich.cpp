#include "palcomb/rich.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "palcomb/eertree.hpp"

namespace palcomb {

namespace {

constexpr int kSplitDepth = 12;

// Counts every rich extension of the current tree text. half[len] has
// already been bumped for the current word; each created push is one more
// rich word (a non-creating push means the extension is not rich, and no
// deeper extension can recover).
void census_dfs(Eertree& tree, int len, int n_max,
                std::vector<std::uint64_t>& half) {
  if (len == n_max) return;
  for (Symbol c = 0; c < 2; ++c) {
    if (tree.push(c).created_new) {
      ++half[static_cast<std::size_t>(len) + 1];
      census_dfs(tree, len + 1, n_max, half);
    }
    tree.pop();
  }
}

// Same walk, but stops at split_len and hands the words of that length out
// as independent subtree tasks.
void census_dfs_collect(Eertree& tree, int len, int split_len, int n_max,
                        std::vector<std::uint64_t>& half,
                        std::vector<std::vector<Symbol>>& tasks) {
  if (len == split_len) {
    if (len < n_max) tasks.push_back(tree.text());
    return;
  }
  for (Symbol c = 0; c < 2; ++c) {
    if (tree.push(c).created_new) {
      ++half[static_cast<std::size_t>(len) + 1];
      census_dfs_collect(tree, len + 1, split_len, n_max, half, tasks);
    }
    tree.pop();
  }
}

}  // namespace

bool is_rich(const Word& w) {
  Eertree tree(w.alphabet_size());
  for (Symbol s : w.symbols()) {
    if (!tree.push(s).created_new) return false;
  }
  return true;
}

bool in_language_I(const Word& w) {
  const RunLengthEncoding rle = run_length_encode(w);
  for (std::size_t i = 0; i + 2 < rle.blocks.size(); ++i) {
    if (rle.blocks[i].run > rle.blocks[i + 2].run) return false;
  }
  return true;
}

CensusTable census_rich(int n_max, int threads, bool override_budget) {
  if (n_max < 1) throw std::invalid_argument("census needs n_max >= 1");
  if (!override_budget && n_max > kRichCensusBudget) {
    throw std::length_error(
        "rich census refuses n_max > 32 without an override; lengths beyond "
        "desk scale are out of reach of this enumeration");
  }
  if (threads < 1) threads = 1;

  // First letter fixed to 0; alphabet renaming preserves richness, so the
  // full counts are exactly double.
  std::vector<std::uint64_t> half(static_cast<std::size_t>(n_max) + 1, 0);
  Eertree tree(2);
  tree.push(0);
  half[1] = 1;

  const int split_len = (threads > 1) ? std::min(kSplitDepth, n_max) : n_max;
  std::vector<std::vector<Symbol>> tasks;
  census_dfs_collect(tree, 1, split_len, n_max, half, tasks);
  tree.pop();

  if (!tasks.empty()) {
    std::vector<std::vector<std::uint64_t>> partials(
        static_cast<std::size_t>(threads),
        std::vector<std::uint64_t>(static_cast<std::size_t>(n_max) + 1, 0));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        auto& local = partials[static_cast<std::size_t>(t)];
        for (std::size_t idx = static_cast<std::size_t>(t); idx < tasks.size();
             idx += static_cast<std::size_t>(threads)) {
          Eertree worker(2);
          for (Symbol s : tasks[idx]) worker.push(s);
          census_dfs(worker, split_len, n_max, local);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& local : partials) {
      for (std::size_t i = 0; i < half.size(); ++i) half[i] += local[i];
    }
  }

  CensusTable table;
  table.sequence_name = "rich";
  table.alphabet_size = 2;
  table.generator_version = kGeneratorVersion;
  table.zero_row = 1;  // the empty word is rich
  for (int n = 1; n <= n_max; ++n) {
    table.rows[n] = u128{2} * half[static_cast<std::size_t>(n)];
  }
  return table;
}

CensusTable census_I(int n_max) {
  if (n_max < 1) throw std::invalid_argument("census needs n_max >= 1");
  if (n_max > 128) {
    throw std::length_error("language-I census capped at n_max <= 128");
  }
  // ways[rem][a][b]: block sequences summing to rem where the next block
  // must have size >= a and the one after it size >= b (the s_i <= s_{i+2}
  // chain). Bounds above rem+1 behave identically, so indices are clamped.
  const std::size_t dim = static_cast<std::size_t>(n_max) + 2;
  std::vector<std::vector<std::vector<u128>>> ways(
      static_cast<std::size_t>(n_max) + 1,
      std::vector<std::vector<u128>>(dim, std::vector<u128>(dim, 0)));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) ways[0][a][b] = 1;
  }
  for (int rem = 1; rem <= n_max; ++rem) {
    for (int a = rem + 1; a >= 1; --a) {
      for (int b = rem + 1; b >= 1; --b) {
        u128 total = 0;
        for (int s = a; s <= rem; ++s) {
          const int next_min = std::min(b, rem - s + 1);
          const int after_min = std::min(s, rem - s + 1);
          total = checked_add(
              total, ways[static_cast<std::size_t>(rem - s)]
                         [static_cast<std::size_t>(next_min)]
                         [static_cast<std::size_t>(after_min)]);
        }
        ways[static_cast<std::size_t>(rem)][static_cast<std::size_t>(a)]
            [static_cast<std::size_t>(b)] = total;
      }
    }
  }

  CensusTable table;
  table.sequence_name = "lang-i";
  table.alphabet_size = 2;
  table.generator_version = kGeneratorVersion;
  table.zero_row = 1;  // the empty word satisfies the chain vacuously
  for (int n = 1; n <= n_max; ++n) {
    table.rows[n] =
        checked_mul(2, ways[static_cast<std::size_t>(n)][1][1]);
  }
  return table;
}

namespace {

// p(n, k) table rows 0..n; p(i, j) = p(i-1, j-1) + p(i-j, j), with the
// out-of-triangle entries (j > i) staying zero.
std::vector<std::vector<u128>> partition_table(int n) {
  if (n < 0) throw std::invalid_argument("negative partition argument");
  std::vector<std::vector<u128>> p(
      static_cast<std::size_t>(n) + 1,
      std::vector<u128>(static_cast<std::size_t>(n) + 1, 0));
  p[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      const u128 with_one =
          p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      const u128 all_larger =
          p[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          checked_add(with_one, all_larger);
    }
  }
  return p;
}

}  // namespace

u128 partitions_k(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative partition argument");
  if (k > n) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  const auto p = partition_table(n);
  return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

u128 partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition argument");
  if (n == 0) return 1;
  const auto p = partition_table(n);
  u128 total = 0;
  for (int k = 1; k <= n; ++k) {
    total = checked_add(total, p[static_cast<std::size_t>(n)]
                                   [static_cast<std::size_t>(k)]);
  }
  return total;
}

double hru_estimate(int n) {
  if (n < 1) throw std::invalid_argument("estimate needs n >= 1");
  const double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) /
         (4.0 * x * std::sqrt(3.0));
}

double n_pow_sqrt_n(int n) {
  const double x = static_cast<double>(n);
  return std::pow(x, std::sqrt(x));
}

BoundReport bound_report(int n, std::optional<u128> cr_value) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("bound chain needs even n >= 4");
  }
  BoundReport r;
  r.n = n;
  r.requested_n = n;

  r.c_i = census_I(n).rows.at(n);
  const auto p = partition_table(n);
  u128 p_n = 0;
  for (int k = 1; k <= n; ++k) {
    p_n = checked_add(p_n, p[static_cast<std::size_t>(n)]
                              [static_cast<std::size_t>(k)]);
  }
  r.p_n = p_n;

  const int h = n / 2;
  u128 p_half = 0, sum_sq = 0, max_part = 0;
  for (int k = 1; k <= h; ++k) {
    const u128 v = p[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
    p_half = checked_add(p_half, v);
    if (k <= h - 1) sum_sq = checked_add(sum_sq, checked_mul(v, v));
    if (v > max_part) max_part = v;
  }
  r.p_half = p_half;
  r.sum_sq_parts = sum_sq;
  r.max_part_sq = checked_mul(max_part, max_part);
  r.four_p_half_sq = checked_mul(4, checked_mul(p_half, p_half));

  r.ci_ge_p = r.c_i >= r.p_n;
  r.chain1_holds = r.c_i >= r.sum_sq_parts;
  r.chain1_strict = r.c_i > r.sum_sq_parts;
  r.chain2_holds = r.sum_sq_parts >= r.max_part_sq;
  r.chain2_strict = r.sum_sq_parts > r.max_part_sq;
  // max_part_sq >= 4 p(n/2)^2 / n^2, cross-multiplied to stay exact.
  const u128 lhs = checked_mul(r.max_part_sq,
                               checked_mul(static_cast<u128>(n),
                                           static_cast<u128>(n)));
  r.chain3_holds = lhs >= r.four_p_half_sq;
  r.chain3_strict = lhs > r.four_p_half_sq;

  r.ln_cr_lower = std::log(to_double(r.c_i));
  r.leading_term = 2.0 * std::numbers::pi / std::sqrt(3.0) *
                   std::sqrt(static_cast<double>(n));
  r.hru_p_estimate = hru_estimate(n);
  if (cr_value) {
    r.cr_value = cr_value;
    r.table1_ratio = to_double(*cr_value) / n_pow_sqrt_n(n);
  }
  return r;
}

BoundReport bound_report_any(int n, std::optional<u128> cr_value) {
  if (n >= 5 && n % 2 == 1) {
    BoundReport r = bound_report(n - 1, cr_value);
    r.requested_n = n;
    r.substituted = true;
    if (cr_value) {
      // The ratio is still reported at the requested length.
      r.table1_ratio = to_double(*cr_value) / n_pow_sqrt_n(n);
    }
    return r;
  }
  return bound_report(n, cr_value);
}

}  // namespace palcomb
