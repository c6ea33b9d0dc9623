// The occurrence-count-preserving bijection between permutations containing
// pattern nr 48 and permutations containing pattern nr 49, together with the
// lexicographic pairing of their avoiders.  A containing permutation has a
// rigid block structure around its occurrences; the map sends the i-th
// occurrence (left to right) to the i-th occurrence (bottom up), carries the
// top block through the level map, and transports each occurrence's
// band-and-gap zone structurally (reverse-complemented gap, reversed band
// membership, the level map on the trailer block).  The structural transform
// alone does not land every zone on an admissible one — which band elements
// may sit in the trailer is constrained differently on the two sides — so
// the zones it cannot place are matched against the equally many unreached
// admissible zones of the same shape, in the lexicographic order of their
// minimal hosts.  The result is an exact bijection level by level in the
// occurrence count.
#ifndef MESHDIST_BIJECTION_HPP
#define MESHDIST_BIJECTION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meshdist/catalog.hpp"
#include "meshdist/mesh_pattern.hpp"
#include "meshdist/oracle.hpp"
#include "meshdist/permutation.hpp"

namespace meshdist {

// Raised when two supposedly equinumerous avoider sets differ in size: a
// reportable finding, distinct from a usage error.
class equidistribution_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- avoider cache -----------------------------------------------------------

// Memoizes avoider lists per (pattern, n), optionally persisting them as one
// permutation per line under the directory named by MESHDIST_CACHE_DIR (or an
// explicit directory).  Lists are in lexicographic order by construction.
class AvoiderCache {
 public:
  AvoiderCache() {
    if (const char* dir = std::getenv("MESHDIST_CACHE_DIR")) cache_dir_ = dir;
  }
  explicit AvoiderCache(std::string cache_dir)
      : cache_dir_(std::move(cache_dir)) {}

  void set_oracle_options(const OracleOptions& options) { options_ = options; }

  const std::vector<Permutation>& avoiders(const MeshPattern& pattern, int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(format_pattern(pattern), n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Permutation> list;
    if (!load_from_disk(key.first, n, &list))
      list = avoiders_lex(pattern, n, options_);
    auto [pos, inserted] = memo_.emplace(std::move(key), std::move(list));
    if (inserted && !cache_dir_.empty())
      save_to_disk(pos->first.first, n, pos->second);
    return pos->second;
  }

 private:
  static std::string fingerprint(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
  }

  std::string file_for(const std::string& label, int n) const {
    return cache_dir_ + "/avoiders-" + fingerprint(label) + "-n" +
           std::to_string(n) + ".txt";
  }

  bool load_from_disk(const std::string& label, int n,
                      std::vector<Permutation>* out) const {
    if (cache_dir_.empty()) return false;
    std::ifstream in(file_for(label, n));
    if (!in) return false;
    std::vector<Permutation> list;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        Permutation p = parse_permutation(line);
        if (p.size() != n) return false;
        list.push_back(std::move(p));
      } catch (const std::exception&) {
        return false;  // stale or corrupt cache entry: recompute
      }
    }
    if (n > 0 && list.empty()) return false;
    *out = std::move(list);
    return true;
  }

  void save_to_disk(const std::string& label, int n,
                    const std::vector<Permutation>& list) const {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    if (ec) return;  // caching is best-effort
    std::ofstream out(file_for(label, n));
    if (!out) return;
    for (const Permutation& p : list) out << format_permutation(p) << '\n';
  }

  std::string cache_dir_;
  OracleOptions options_;
  std::map<std::pair<std::string, int>, std::vector<Permutation>> memo_;
  std::mutex mutex_;
};

// --- lexicographic avoider pairing -------------------------------------------

// Sends the i-th lexicographically smallest avoider of `from` to the i-th
// lexicographically smallest avoider of `to`.
inline Permutation lex_bijection_f(const Permutation& pi,
                                   const MeshPattern& from,
                                   const MeshPattern& to,
                                   AvoiderCache& cache) {
  int n = pi.size();
  const std::vector<Permutation>& src = cache.avoiders(from, n);
  const std::vector<Permutation>& dst = cache.avoiders(to, n);
  if (src.size() != dst.size())
    throw equidistribution_violation(
        "avoider counts differ at n=" + std::to_string(n) + ": " +
        std::to_string(src.size()) + " vs " + std::to_string(dst.size()));
  auto it = std::lower_bound(src.begin(), src.end(), pi);
  if (it == src.end() || !(*it == pi))
    throw std::invalid_argument("permutation is not an avoider of the source pattern");
  return dst[static_cast<std::size_t>(it - src.begin())];
}

// --- block decomposition -----------------------------------------------------

struct OccurrencePair {
  int x_pos = 0, y_pos = 0;  // 1-based positions
  int x_val = 0, y_val = 0;
};

// Per-occurrence companion blocks, as 1-based positions in the host:
// x1 and x3 live in the occurrence's position gap, x2 in its trailer zone.
struct BlockGroup {
  std::vector<int> x1, x2, x3;
};

struct BlockDecomposition {
  std::vector<OccurrencePair> occurrences;
  std::vector<int> block_a;
  std::vector<BlockGroup> groups;
};

namespace detail {

inline std::vector<int> values_at(const Permutation& pi,
                                  const std::vector<int>& positions) {
  std::vector<int> vals;
  vals.reserve(positions.size());
  for (int p : positions) vals.push_back(pi.at(p));
  return vals;
}

[[noreturn]] inline void structure_error(const char* what) {
  throw std::logic_error(std::string("containment structure violated: ") + what);
}

}  // namespace detail

// Decomposition of a permutation containing nr 48.  Occurrences are ordered
// left to right; the blocks follow the containment template: A before the
// first occurrence (values above everything), x3 blocks inside the position
// gaps (values inside the occurrence's value gap), x1 inside the gaps and
// x2 after the occurrence (both in the value band below the occurrence).
inline BlockDecomposition decompose_48(const Permutation& pi) {
  const MeshPattern& pattern = catalog_lookup(48).pattern;
  std::vector<Occurrence> occs = find_occurrences(pattern, pi);
  if (occs.empty())
    throw std::invalid_argument("permutation avoids the pattern");
  BlockDecomposition d;
  for (const Occurrence& o : occs) {
    OccurrencePair pair;
    pair.x_pos = o.positions[0];
    pair.y_pos = o.positions[1];
    pair.x_val = pi.at(pair.x_pos);
    pair.y_val = pi.at(pair.y_pos);
    d.occurrences.push_back(pair);
  }
  std::sort(d.occurrences.begin(), d.occurrences.end(),
            [](const OccurrencePair& a, const OccurrencePair& b) {
              return a.x_pos < b.x_pos;
            });
  int k = static_cast<int>(d.occurrences.size());
  for (int i = 0; i + 1 < k; ++i) {
    const auto& cur = d.occurrences[static_cast<std::size_t>(i)];
    const auto& nxt = d.occurrences[static_cast<std::size_t>(i + 1)];
    if (!(cur.y_pos < nxt.x_pos)) detail::structure_error("positions interleave");
    if (!(cur.x_val > nxt.y_val)) detail::structure_error("value chain broken");
  }
  d.groups.assign(static_cast<std::size_t>(k), {});
  int n = pi.size();
  for (int p = 1; p <= n; ++p) {
    int v = pi.at(p);
    bool selected = false;
    for (const auto& o : d.occurrences)
      if (p == o.x_pos || p == o.y_pos) selected = true;
    if (selected) continue;
    if (v > d.occurrences[0].y_val) {
      if (!(p < d.occurrences[0].x_pos)) detail::structure_error("top block placement");
      d.block_a.push_back(p);
      continue;
    }
    bool placed = false;
    for (int i = 0; i < k && !placed; ++i) {
      const auto& o = d.occurrences[static_cast<std::size_t>(i)];
      int band_floor = i + 1 < k ? d.occurrences[static_cast<std::size_t>(i + 1)].y_val : 0;
      auto& g = d.groups[static_cast<std::size_t>(i)];
      if (v > o.x_val && v < o.y_val) {
        if (!(p > o.x_pos && p < o.y_pos)) detail::structure_error("gap block placement");
        g.x3.push_back(p);
        placed = true;
      } else if (v > band_floor && v < o.x_val) {
        if (p > o.x_pos && p < o.y_pos) {
          g.x1.push_back(p);
        } else {
          int zone_end = i + 1 < k
                             ? d.occurrences[static_cast<std::size_t>(i + 1)].x_pos
                             : n + 1;
          if (!(p > o.y_pos && p < zone_end))
            detail::structure_error("trailer block placement");
          g.x2.push_back(p);
        }
        placed = true;
      }
    }
    if (!placed) detail::structure_error("unclassified element");
  }
  return d;
}

// Decomposition of a permutation containing nr 49.  Occurrences are ordered
// bottom-up in value; positionally they nest: x_k .. x_1 A y_1 .. y_k, with
// A (values below everything) between x_1 and y_1, x3 blocks between
// consecutive y's, x1 sharing that zone and x2 sitting between consecutive
// x's at the front.
inline BlockDecomposition decompose_49(const Permutation& pi) {
  const MeshPattern& pattern = catalog_lookup(49).pattern;
  std::vector<Occurrence> occs = find_occurrences(pattern, pi);
  if (occs.empty())
    throw std::invalid_argument("permutation avoids the pattern");
  BlockDecomposition d;
  for (const Occurrence& o : occs) {
    OccurrencePair pair;
    pair.x_pos = o.positions[0];
    pair.y_pos = o.positions[1];
    pair.x_val = pi.at(pair.x_pos);
    pair.y_val = pi.at(pair.y_pos);
    d.occurrences.push_back(pair);
  }
  std::sort(d.occurrences.begin(), d.occurrences.end(),
            [](const OccurrencePair& a, const OccurrencePair& b) {
              return a.x_val < b.x_val;
            });
  int k = static_cast<int>(d.occurrences.size());
  for (int i = 0; i + 1 < k; ++i) {
    const auto& cur = d.occurrences[static_cast<std::size_t>(i)];
    const auto& nxt = d.occurrences[static_cast<std::size_t>(i + 1)];
    if (!(cur.y_val < nxt.x_val)) detail::structure_error("value chain broken");
    if (!(nxt.x_pos < cur.x_pos && cur.y_pos < nxt.y_pos))
      detail::structure_error("positions do not nest");
  }
  d.groups.assign(static_cast<std::size_t>(k), {});
  int n = pi.size();
  for (int p = 1; p <= n; ++p) {
    int v = pi.at(p);
    bool selected = false;
    for (const auto& o : d.occurrences)
      if (p == o.x_pos || p == o.y_pos) selected = true;
    if (selected) continue;
    if (v < d.occurrences[0].x_val) {
      if (!(p > d.occurrences[0].x_pos && p < d.occurrences[0].y_pos))
        detail::structure_error("bottom block placement");
      d.block_a.push_back(p);
      continue;
    }
    bool placed = false;
    for (int i = 0; i < k && !placed; ++i) {
      const auto& o = d.occurrences[static_cast<std::size_t>(i)];
      int band_ceiling = i + 1 < k
                             ? d.occurrences[static_cast<std::size_t>(i + 1)].x_val
                             : n + 1;
      int gap_zone_end = i + 1 < k
                             ? d.occurrences[static_cast<std::size_t>(i + 1)].y_pos
                             : n + 1;
      auto& g = d.groups[static_cast<std::size_t>(i)];
      if (v > o.x_val && v < o.y_val) {
        if (!(p > o.y_pos && p < gap_zone_end))
          detail::structure_error("gap block placement");
        g.x3.push_back(p);
        placed = true;
      } else if (v > o.y_val && v < band_ceiling) {
        if (p > o.y_pos && p < gap_zone_end) {
          g.x1.push_back(p);
        } else {
          int zone_begin = i + 1 < k
                               ? d.occurrences[static_cast<std::size_t>(i + 1)].x_pos
                               : 0;
          if (!(p > zone_begin && p < o.x_pos))
            detail::structure_error("trailer block placement");
          g.x2.push_back(p);
        }
        placed = true;
      }
    }
    if (!placed) detail::structure_error("unclassified element");
  }
  return d;
}

inline BlockDecomposition decompose(const MeshPattern& pattern,
                                    const Permutation& pi) {
  if (pattern == catalog_lookup(48).pattern) return decompose_48(pi);
  if (pattern == catalog_lookup(49).pattern) return decompose_49(pi);
  throw std::invalid_argument("decomposition is defined for patterns nr 48 and nr 49");
}

// --- the occurrence-preserving map -------------------------------------------

inline Permutation map_g(const Permutation& pi, AvoiderCache& cache);
inline Permutation map_g_inverse(const Permutation& sigma, AvoiderCache& cache);

namespace detail {

// Largest block routed through the avoider pairing, which enumerates every
// avoider of that size once.
constexpr int kAvoiderBlockLimit = 10;
// Largest band-plus-inner zone for which the residual pairing is enumerable
// (a zone shape with band m and inner t has m! * C(m+t+1, t+1) members).
constexpr int kZonePairingBudget = 9;

inline Permutation reverse_complement(const Permutation& p) {
  return p.reversed().complemented();
}

// Writes `pattern` over the value set `values` (ascending) into `word` at
// `positions` (ascending): position j receives the pattern[j]-th smallest.
inline void place_block(std::vector<int>& word, const std::vector<int>& positions,
                        const Permutation& pattern, const std::vector<int>& values) {
  if (static_cast<int>(positions.size()) != pattern.size() ||
      positions.size() != values.size())
    throw std::logic_error("block size mismatch");
  for (std::size_t j = 0; j < positions.size(); ++j)
    word[static_cast<std::size_t>(positions[j] - 1)] =
        values[static_cast<std::size_t>(pattern.at(static_cast<int>(j) + 1) - 1)];
}

// Maps a block through the level map in the given direction: an avoider
// crosses through the lexicographic pairing, a containing block recurses
// through the full map, so occurrence counts survive at every level.
inline Permutation level_block_map(const Permutation& p, bool forward,
                                   AvoiderCache& cache) {
  const MeshPattern& src = catalog_lookup(forward ? 48 : 49).pattern;
  const MeshPattern& dst = catalog_lookup(forward ? 49 : 48).pattern;
  if (count_occurrences(src, p) > 0)
    return forward ? map_g(p, cache) : map_g_inverse(p, cache);
  if (p.size() > kAvoiderBlockLimit)
    throw std::invalid_argument(
        "companion block too large for the avoider pairing (size " +
        std::to_string(p.size()) + ", limit " +
        std::to_string(kAvoiderBlockLimit) + ")");
  return lex_bijection_f(p, src, dst, cache);
}

// One occurrence's companion zone, the same shape on either side: `split`
// says which band ranks (bottom to top) sit in the trailer block, `u` is the
// gap-side band block's internal pattern, `v` the trailer block's, and `mix`
// interleaves band (0) and inner (1) elements along the gap.  The inner
// block's own pattern never affects which zones are admissible, so it
// travels separately.
struct ZoneCore {
  std::vector<int> split;
  Permutation u, v;
  std::vector<int> mix;

  int band_size() const { return static_cast<int>(split.size()); }
  int inner_size() const {
    return static_cast<int>(std::count(mix.begin(), mix.end(), 1));
  }
};

inline ZoneCore extract_core(const Permutation& host, const BlockGroup& g) {
  ZoneCore c;
  std::vector<std::pair<int, int>> band;  // (value, in trailer?)
  for (int p : g.x1) band.emplace_back(host.at(p), 0);
  for (int p : g.x2) band.emplace_back(host.at(p), 1);
  std::sort(band.begin(), band.end());
  c.split.reserve(band.size());
  for (const auto& e : band) c.split.push_back(e.second);
  c.u = reduce(values_at(host, g.x1));
  c.v = reduce(values_at(host, g.x2));
  std::vector<std::pair<int, int>> zone;  // (position, inner?)
  for (int p : g.x1) zone.emplace_back(p, 0);
  for (int p : g.x3) zone.emplace_back(p, 1);
  std::sort(zone.begin(), zone.end());
  c.mix.reserve(zone.size());
  for (const auto& e : zone) c.mix.push_back(e.second);
  return c;
}

// Minimal one-occurrence hosts exhibiting a zone, with the inner block laid
// down as an ascending run.  A zone is admissible exactly when its minimal
// host has no second occurrence; the host word also serves as the zone's
// canonical sort key.
inline Permutation zone_host_48(const ZoneCore& c) {
  const int m = c.band_size();
  const int t = c.inner_size();
  std::vector<int> u_vals, v_vals;
  for (int r = 0; r < m; ++r)
    (c.split[static_cast<std::size_t>(r)] ? v_vals : u_vals).push_back(r + 1);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(m + t + 2));
  word.push_back(m + 1);  // x
  int inner_next = m + 2;
  int ui = 0;
  for (int cls : c.mix) {
    if (cls)
      word.push_back(inner_next++);
    else
      word.push_back(u_vals[static_cast<std::size_t>(c.u.at(++ui) - 1)]);
  }
  word.push_back(m + t + 2);  // y
  for (int j = 1; j <= c.v.size(); ++j)
    word.push_back(v_vals[static_cast<std::size_t>(c.v.at(j) - 1)]);
  return Permutation(word);
}

inline Permutation zone_host_49(const ZoneCore& c) {
  const int m = c.band_size();
  const int t = c.inner_size();
  std::vector<int> u_vals, v_vals;
  for (int r = 0; r < m; ++r)
    (c.split[static_cast<std::size_t>(r)] ? v_vals : u_vals).push_back(t + 3 + r);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(m + t + 2));
  for (int j = 1; j <= c.v.size(); ++j)
    word.push_back(v_vals[static_cast<std::size_t>(c.v.at(j) - 1)]);
  word.push_back(1);      // x
  word.push_back(t + 2);  // y
  int inner_next = 2;
  int ui = 0;
  for (int cls : c.mix) {
    if (cls)
      word.push_back(inner_next++);
    else
      word.push_back(u_vals[static_cast<std::size_t>(c.u.at(++ui) - 1)]);
  }
  return Permutation(word);
}

inline bool zone_admissible_48(const ZoneCore& c) {
  return count_occurrences(catalog_lookup(48).pattern, zone_host_48(c)) == 1;
}

inline bool zone_admissible_49(const ZoneCore& c) {
  return count_occurrences(catalog_lookup(49).pattern, zone_host_49(c)) == 1;
}

// The structural zone transform: reverse the band membership and the gap
// interleaving, reverse-complement the gap-side band block, and carry the
// trailer block through the level map.  An involution up to the direction of
// the trailer's level map.
inline ZoneCore transform_core(const ZoneCore& c, bool forward,
                               AvoiderCache& cache) {
  ZoneCore o;
  o.split.assign(c.split.rbegin(), c.split.rend());
  o.u = reverse_complement(c.u);
  o.v = level_block_map(c.v, forward, cache);
  o.mix.assign(c.mix.rbegin(), c.mix.rend());
  return o;
}

// The residual pairing for one zone shape: admissible zones whose transform
// image is not admissible on the other side, sorted by minimal-host word.
// Both sides of a shape always have equally many residual zones; that count
// equality is what makes the zone map total, so it is re-checked here.
struct ZonePairingTable {
  std::vector<std::pair<std::vector<int>, ZoneCore>> res48, res49;
};

inline const ZonePairingTable& zone_pairing_table(int m, int t,
                                                  AvoiderCache& cache) {
  static std::map<std::pair<int, int>, ZonePairingTable> memo;
  static std::mutex mutex;
  const auto key = std::make_pair(m, t);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  ZonePairingTable table;
  for (int mask = 0; mask < (1 << m); ++mask) {
    ZoneCore base;
    base.split.resize(static_cast<std::size_t>(m));
    int m2 = 0;
    for (int r = 0; r < m; ++r) {
      base.split[static_cast<std::size_t>(r)] = (mask >> r) & 1;
      m2 += (mask >> r) & 1;
    }
    const int m1 = m - m2;
    std::vector<int> u_word(static_cast<std::size_t>(m1));
    std::iota(u_word.begin(), u_word.end(), 1);
    do {
      std::vector<int> v_word(static_cast<std::size_t>(m2));
      std::iota(v_word.begin(), v_word.end(), 1);
      do {
        const int zone_len = m1 + t;
        for (int zmask = 0; zmask < (1 << zone_len); ++zmask) {
          if (std::popcount(static_cast<unsigned>(zmask)) != t) continue;
          ZoneCore c = base;
          c.u = Permutation(u_word);
          c.v = Permutation(v_word);
          c.mix.resize(static_cast<std::size_t>(zone_len));
          for (int j = 0; j < zone_len; ++j)
            c.mix[static_cast<std::size_t>(j)] = (zmask >> j) & 1;
          if (zone_admissible_48(c) &&
              !zone_admissible_49(transform_core(c, true, cache)))
            table.res48.emplace_back(zone_host_48(c).word(), c);
          if (zone_admissible_49(c) &&
              !zone_admissible_48(transform_core(c, false, cache)))
            table.res49.emplace_back(zone_host_49(c).word(), c);
        }
      } while (std::next_permutation(v_word.begin(), v_word.end()));
    } while (std::next_permutation(u_word.begin(), u_word.end()));
  }
  auto by_key = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(table.res48.begin(), table.res48.end(), by_key);
  std::sort(table.res49.begin(), table.res49.end(), by_key);
  if (table.res48.size() != table.res49.size())
    throw equidistribution_violation(
        "residual zone classes are not equinumerous at band=" +
        std::to_string(m) + " inner=" + std::to_string(t) + ": " +
        std::to_string(table.res48.size()) + " vs " +
        std::to_string(table.res49.size()));
  std::lock_guard<std::mutex> lock(mutex);
  return memo.emplace(key, std::move(table)).first->second;
}

// Maps one zone: by the structural transform when its image is admissible,
// otherwise by the residual pairing of its shape.
inline ZoneCore map_zone(const ZoneCore& c, bool forward, AvoiderCache& cache) {
  ZoneCore image = transform_core(c, forward, cache);
  if (forward ? zone_admissible_49(image) : zone_admissible_48(image))
    return image;
  const int m = c.band_size();
  const int t = c.inner_size();
  if (m + t > kZonePairingBudget)
    throw std::invalid_argument(
        "occurrence zone too large for the residual pairing (band " +
        std::to_string(m) + " + inner " + std::to_string(t) + " exceeds " +
        std::to_string(kZonePairingBudget) + ")");
  const ZonePairingTable& table = zone_pairing_table(m, t, cache);
  const auto& from_list = forward ? table.res48 : table.res49;
  const auto& to_list = forward ? table.res49 : table.res48;
  const std::vector<int> key =
      (forward ? zone_host_48(c) : zone_host_49(c)).word();
  auto it = std::lower_bound(
      from_list.begin(), from_list.end(), key,
      [](const auto& entry, const std::vector<int>& k) { return entry.first < k; });
  if (it == from_list.end() || it->first != key)
    throw std::logic_error("zone missing from the residual pairing table");
  return to_list[static_cast<std::size_t>(it - from_list.begin())].second;
}

}  // namespace detail

// g: a permutation containing nr 48 -> a permutation containing nr 49 with
// the same number of occurrences.  The i-th occurrence (left to right)
// becomes the i-th occurrence (bottom up); the top block crosses through the
// level map, each inner block travels as its reverse-complement, and each
// occurrence's band-and-gap zone goes through the zone map, which may
// re-balance how the band splits between the gap and trailer blocks.
inline Permutation map_g(const Permutation& pi, AvoiderCache& cache) {
  BlockDecomposition d = decompose_48(pi);
  const int n = pi.size();
  const int k = static_cast<int>(d.occurrences.size());

  // Map the movable parts.
  Permutation block_a =
      detail::level_block_map(reduce(detail::values_at(pi, d.block_a)), true, cache);
  std::vector<detail::ZoneCore> cores;
  std::vector<Permutation> inners;
  cores.reserve(static_cast<std::size_t>(k));
  inners.reserve(static_cast<std::size_t>(k));
  for (const BlockGroup& g : d.groups) {
    cores.push_back(detail::map_zone(detail::extract_core(pi, g), true, cache));
    inners.push_back(
        detail::reverse_complement(reduce(detail::values_at(pi, g.x3))));
  }

  // Value assignment, bottom to top: A, then per occurrence x, inner, y, band.
  int cur = 1;
  std::vector<int> a_values;
  for (int j = 0; j < block_a.size(); ++j) a_values.push_back(cur++);
  std::vector<int> x_vals(static_cast<std::size_t>(k)), y_vals(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> inner_values(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> u_values(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> v_values(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    x_vals[idx] = cur++;
    for (int j = 0; j < inners[idx].size(); ++j) inner_values[idx].push_back(cur++);
    y_vals[idx] = cur++;
    for (int tag : cores[idx].split)
      (tag ? v_values[idx] : u_values[idx]).push_back(cur++);
  }
  if (cur != n + 1) throw std::logic_error("value accounting error");

  // Position layout, left to right:
  // [trailer_k] x_k ... [trailer_1] x_1 [A] y_1 [zone_1] y_2 [zone_2] ... y_k [zone_k]
  std::vector<int> a_positions;
  std::vector<std::vector<int>> trailer_positions(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> zone_positions(static_cast<std::size_t>(k));
  std::vector<int> x_pos(static_cast<std::size_t>(k)), y_pos(static_cast<std::size_t>(k));
  int pos = 1;
  for (int i = k - 1; i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    for (int j = 0; j < cores[idx].v.size(); ++j)
      trailer_positions[idx].push_back(pos++);
    x_pos[idx] = pos++;
  }
  for (std::size_t j = 0; j < a_values.size(); ++j) a_positions.push_back(pos++);
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    y_pos[idx] = pos++;
    for (std::size_t j = 0; j < cores[idx].mix.size(); ++j)
      zone_positions[idx].push_back(pos++);
  }
  if (pos != n + 1) throw std::logic_error("position accounting error");

  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    word[static_cast<std::size_t>(x_pos[idx] - 1)] = x_vals[idx];
    word[static_cast<std::size_t>(y_pos[idx] - 1)] = y_vals[idx];
  }
  detail::place_block(word, a_positions, block_a, a_values);
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    detail::place_block(word, trailer_positions[idx], cores[idx].v, v_values[idx]);
    // The gap zone interleaves the band block and the inner block per `mix`.
    std::vector<int> band_slots, inner_slots;
    for (std::size_t j = 0; j < cores[idx].mix.size(); ++j)
      (cores[idx].mix[j] ? inner_slots : band_slots)
          .push_back(zone_positions[idx][j]);
    detail::place_block(word, band_slots, cores[idx].u, u_values[idx]);
    detail::place_block(word, inner_slots, inners[idx], inner_values[idx]);
  }
  return Permutation(word);
}

// The inverse of map_g, rebuilding the nr 48 template from the nr 49 one
// with every component map run backwards.
inline Permutation map_g_inverse(const Permutation& sigma, AvoiderCache& cache) {
  BlockDecomposition d = decompose_49(sigma);
  const int n = sigma.size();
  const int k = static_cast<int>(d.occurrences.size());

  Permutation block_a = detail::level_block_map(
      reduce(detail::values_at(sigma, d.block_a)), false, cache);
  std::vector<detail::ZoneCore> cores;
  std::vector<Permutation> inners;
  cores.reserve(static_cast<std::size_t>(k));
  inners.reserve(static_cast<std::size_t>(k));
  for (const BlockGroup& g : d.groups) {
    cores.push_back(detail::map_zone(detail::extract_core(sigma, g), false, cache));
    inners.push_back(
        detail::reverse_complement(reduce(detail::values_at(sigma, g.x3))));
  }

  // Value assignment, bottom to top:
  // band_k, x_k, inner_k, y_k, band_{k-1}, ..., band_1, x_1, inner_1, y_1, A.
  int cur = 1;
  std::vector<int> x_vals(static_cast<std::size_t>(k)), y_vals(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> inner_values(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> u_values(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> v_values(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    for (int tag : cores[idx].split)
      (tag ? v_values[idx] : u_values[idx]).push_back(cur++);
    x_vals[idx] = cur++;
    for (int j = 0; j < inners[idx].size(); ++j) inner_values[idx].push_back(cur++);
    y_vals[idx] = cur++;
  }
  std::vector<int> a_values;
  for (int j = 0; j < block_a.size(); ++j) a_values.push_back(cur++);
  if (cur != n + 1) throw std::logic_error("value accounting error");

  // Position layout: [A] x_1 [zone_1] y_1 [trailer_1] x_2 [zone_2] y_2 ...
  std::vector<int> a_positions;
  std::vector<std::vector<int>> zone_positions(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> trailer_positions(static_cast<std::size_t>(k));
  std::vector<int> x_pos(static_cast<std::size_t>(k)), y_pos(static_cast<std::size_t>(k));
  int pos = 1;
  for (std::size_t j = 0; j < a_values.size(); ++j) a_positions.push_back(pos++);
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    x_pos[idx] = pos++;
    for (std::size_t j = 0; j < cores[idx].mix.size(); ++j)
      zone_positions[idx].push_back(pos++);
    y_pos[idx] = pos++;
    for (int j = 0; j < cores[idx].v.size(); ++j)
      trailer_positions[idx].push_back(pos++);
  }
  if (pos != n + 1) throw std::logic_error("position accounting error");

  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    word[static_cast<std::size_t>(x_pos[idx] - 1)] = x_vals[idx];
    word[static_cast<std::size_t>(y_pos[idx] - 1)] = y_vals[idx];
  }
  detail::place_block(word, a_positions, block_a, a_values);
  for (int i = 0; i < k; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    detail::place_block(word, trailer_positions[idx], cores[idx].v, v_values[idx]);
    std::vector<int> band_slots, inner_slots;
    for (std::size_t j = 0; j < cores[idx].mix.size(); ++j)
      (cores[idx].mix[j] ? inner_slots : band_slots)
          .push_back(zone_positions[idx][j]);
    detail::place_block(word, band_slots, cores[idx].u, u_values[idx]);
    detail::place_block(word, inner_slots, inners[idx], inner_values[idx]);
  }
  return Permutation(word);
}

}  // namespace meshdist

#endif  // MESHDIST_BIJECTION_HPP
