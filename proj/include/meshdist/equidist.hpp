// Equidistribution checks: groups of catalogued patterns whose occurrence
// distributions are (provably or conjecturally) identical, compared on full
// oracle tables.
#ifndef MESHDIST_EQUIDIST_HPP
#define MESHDIST_EQUIDIST_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshdist/catalog.hpp"
#include "meshdist/oracle.hpp"
#include "meshdist/tables.hpp"

namespace meshdist {

struct GroupVerdict {
  int n = 0;
  bool equal = true;
  // first divergence, set when !equal
  int k = -1;
  int nr_a = 0, nr_b = 0;
  Int count_a, count_b;
};

struct EquidistReport {
  std::vector<int> nrs;
  bool proved = false;
  int n_max = 0;
  bool all_equal = true;
  std::vector<GroupVerdict> per_n;
};

// Groups whose common distribution follows from an implemented result; an
// inequality here is a bug, not a finding.
inline const std::vector<std::vector<int>>& proved_groups() {
  static const std::vector<std::vector<int>> groups = {
      {8, 9}, {14, 15}, {48, 49}, {63, 64, 65}};
  return groups;
}

// Groups supported by exhaustive evidence only.
inline const std::vector<std::vector<int>>& conjectured_groups() {
  static const std::vector<std::vector<int>> groups = {
      {23, 24}, {48, 49, 50}, {53, 54}, {57, 58}, {61, 62}};
  return groups;
}

inline EquidistReport check_group(const std::vector<int>& nrs, int n_max,
                                  bool proved,
                                  const OracleOptions& options = {}) {
  if (nrs.size() < 2)
    throw std::invalid_argument("an equidistribution group needs >= 2 patterns");
  EquidistReport report;
  report.nrs = nrs;
  report.proved = proved;
  report.n_max = n_max;
  std::vector<DistributionTable> tables;
  tables.reserve(nrs.size());
  for (int nr : nrs)
    tables.push_back(
        brute_distribution(catalog_lookup(nr).pattern, n_max, options));
  for (int n = 0; n <= n_max; ++n) {
    GroupVerdict v;
    v.n = n;
    const auto& base = tables[0].rows[static_cast<std::size_t>(n)];
    for (std::size_t t = 1; t < tables.size() && v.equal; ++t) {
      const auto& other = tables[t].rows[static_cast<std::size_t>(n)];
      std::size_t width = std::max(base.size(), other.size());
      for (std::size_t k = 0; k < width; ++k) {
        Int a = k < base.size() ? base[k] : Int(0);
        Int b = k < other.size() ? other[k] : Int(0);
        if (a != b) {
          v.equal = false;
          v.k = static_cast<int>(k);
          v.nr_a = nrs[0];
          v.nr_b = nrs[t];
          v.count_a = a;
          v.count_b = b;
          break;
        }
      }
    }
    if (!v.equal) report.all_equal = false;
    report.per_n.push_back(v);
  }
  return report;
}

inline std::string format_report_json(const EquidistReport& r) {
  std::ostringstream os;
  os << "{\"group\": [";
  for (std::size_t i = 0; i < r.nrs.size(); ++i) {
    if (i > 0) os << ", ";
    os << r.nrs[i];
  }
  os << "], \"status\": \"" << (r.proved ? "proved" : "conjectured")
     << "\", \"n_max\": " << r.n_max
     << ", \"equal\": " << (r.all_equal ? "true" : "false") << ", \"per_n\": [";
  for (std::size_t i = 0; i < r.per_n.size(); ++i) {
    const GroupVerdict& v = r.per_n[i];
    if (i > 0) os << ", ";
    os << "{\"n\": " << v.n << ", \"equal\": " << (v.equal ? "true" : "false");
    if (!v.equal)
      os << ", \"k\": " << v.k << ", \"nr_a\": " << v.nr_a
         << ", \"nr_b\": " << v.nr_b << ", \"count_a\": " << v.count_a.str()
         << ", \"count_b\": " << v.count_b.str();
    os << "}";
  }
  os << "]}";
  return os.str();
}

inline std::string format_report_text(const EquidistReport& r) {
  std::ostringstream os;
  os << "group {";
  for (std::size_t i = 0; i < r.nrs.size(); ++i) {
    if (i > 0) os << ", ";
    os << r.nrs[i];
  }
  os << "} (" << (r.proved ? "proved" : "conjectured") << "): ";
  if (r.all_equal) {
    os << "distributions equal for all n <= " << r.n_max;
  } else {
    for (const GroupVerdict& v : r.per_n)
      if (!v.equal) {
        os << "first divergence at n=" << v.n << ", k=" << v.k << ": nr"
           << v.nr_a << " has " << v.count_a.str() << ", nr" << v.nr_b
           << " has " << v.count_b.str();
        break;
      }
  }
  return os.str();
}

}  // namespace meshdist

#endif  // MESHDIST_EQUIDIST_HPP
