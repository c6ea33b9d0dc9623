// Exhaustive enumeration over S_n: the ground truth every formula in this
// library is checked against.  Counts are produced by scanning each
// permutation for occurrences of a mesh pattern, with optional sharding by
// first letter; shard merges are plain additions, so output is identical for
// every shard count.
#ifndef MESHDIST_ORACLE_HPP
#define MESHDIST_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "meshdist/ints.hpp"
#include "meshdist/mesh_pattern.hpp"
#include "meshdist/permutation.hpp"
#include "meshdist/tables.hpp"

namespace meshdist {

// Full enumeration of S_n grows as n!: the default ceiling keeps runs in the
// seconds range, the hard ceiling (opt-in) in the minutes range, and nothing
// beyond it is ever attempted.
inline constexpr int kOracleCeiling = 9;
inline constexpr int kOracleHardCeiling = 10;

struct OracleOptions {
  int shard_count = 0;  // 0 = one shard per hardware thread
  bool allow_hard_ceiling = false;
};

namespace detail {

inline void check_ceiling(int n, const OracleOptions& options) {
  if (n < 0) throw std::invalid_argument("negative permutation length");
  if (n > kOracleHardCeiling)
    throw std::invalid_argument(
        "exhaustive enumeration beyond n=" +
        std::to_string(kOracleHardCeiling) + " is not supported");
  if (n > kOracleCeiling && !options.allow_hard_ceiling)
    throw std::invalid_argument(
        "exhaustive enumeration beyond n=" + std::to_string(kOracleCeiling) +
        " requires the explicit override");
}

inline int resolve_shard_count(int requested, int n) {
  int shards = requested;
  if (shards <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    shards = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (n >= 1 && shards > n) shards = n;
  return shards < 1 ? 1 : shards;
}

inline void add_into(std::vector<Int>& acc, const std::vector<Int>& part) {
  if (acc.size() < part.size()) acc.resize(part.size(), Int(0));
  for (std::size_t i = 0; i < part.size(); ++i) acc[i] += part[i];
}

// Histogram of fn over all of S_n, fn(pi) >= 0.  Shard s handles the first
// letters s+1, s+1+shards, ...; partial histograms are summed in shard order,
// and since addition is commutative the result is independent of the split.
inline std::vector<Int> histogram_over_sn(
    int n, int shard_count, const std::function<long(const Permutation&)>& fn) {
  std::vector<Int> row;
  if (n == 0) {
    for_each_permutation(0, [&](const Permutation& pi) {
      long k = fn(pi);
      if (static_cast<long>(row.size()) <= k) row.resize(static_cast<std::size_t>(k) + 1, Int(0));
      row[static_cast<std::size_t>(k)] += 1;
    });
    return row;
  }
  int shards = resolve_shard_count(shard_count, n);
  auto run_shard = [n, shards, &fn](int shard) {
    std::vector<Int> part;
    for (int first = shard + 1; first <= n; first += shards)
      for_each_permutation_with_first(n, first, [&](const Permutation& pi) {
        long k = fn(pi);
        if (k < 0) throw std::logic_error("negative statistic value");
        if (static_cast<long>(part.size()) <= k)
          part.resize(static_cast<std::size_t>(k) + 1, Int(0));
        part[static_cast<std::size_t>(k)] += 1;
      });
    return part;
  };
  if (shards == 1) {
    row = run_shard(0);
  } else {
    std::vector<std::future<std::vector<Int>>> futures;
    futures.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s)
      futures.push_back(std::async(std::launch::async, run_shard, s));
    for (auto& f : futures) add_into(row, f.get());
  }
  if (row.empty()) row.push_back(Int(0));
  return row;
}

}  // namespace detail

// T_{n,k} for 0 <= n <= n_max by direct occurrence counting.
inline DistributionTable brute_distribution(const MeshPattern& pattern,
                                            int n_max,
                                            const OracleOptions& options = {}) {
  detail::check_ceiling(n_max, options);
  DistributionTable table;
  table.pattern_label = format_pattern(pattern);
  table.rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    table.rows.push_back(detail::histogram_over_sn(
        n, options.shard_count,
        [&pattern](const Permutation& pi) { return count_occurrences(pattern, pi); }));
  normalize(table);
  return table;
}

// Joint counts[n][k][d]: k occurrences of `pattern`, d of `statistic`.
inline JointTable brute_joint(const MeshPattern& pattern,
                              const std::function<int(const Permutation&)>& statistic,
                              std::string label, int n_max,
                              const OracleOptions& options = {}) {
  detail::check_ceiling(n_max, options);
  JointTable table;
  table.label = std::move(label);
  table.counts.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::vector<Int>> slice;
    for_each_permutation(n, [&](const Permutation& pi) {
      long k = count_occurrences(pattern, pi);
      int d = statistic(pi);
      if (k < 0 || d < 0) throw std::logic_error("negative statistic value");
      if (static_cast<long>(slice.size()) <= k)
        slice.resize(static_cast<std::size_t>(k) + 1);
      auto& cell = slice[static_cast<std::size_t>(k)];
      if (static_cast<int>(cell.size()) <= d)
        cell.resize(static_cast<std::size_t>(d) + 1, Int(0));
      cell[static_cast<std::size_t>(d)] += 1;
    });
    if (slice.empty()) slice.push_back({Int(0)});
    table.counts.push_back(std::move(slice));
  }
  return table;
}

// All pattern-avoiding permutations of [n] in lexicographic order (the order
// in which they are generated; no sort happens).
inline std::vector<Permutation> avoiders_lex(const MeshPattern& pattern, int n,
                                             const OracleOptions& options = {}) {
  detail::check_ceiling(n, options);
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& pi) {
    if (count_occurrences(pattern, pi) == 0) out.push_back(pi);
  });
  return out;
}

// Number of avoiders only (cheaper than materialising them).
inline Int count_avoiders(const MeshPattern& pattern, int n,
                          const OracleOptions& options = {}) {
  detail::check_ceiling(n, options);
  std::vector<Int> row = detail::histogram_over_sn(
      n, options.shard_count,
      [&pattern](const Permutation& pi) { return count_occurrences(pattern, pi); });
  return row.empty() ? Int(0) : row[0];
}

}  // namespace meshdist

#endif  // MESHDIST_ORACLE_HPP
