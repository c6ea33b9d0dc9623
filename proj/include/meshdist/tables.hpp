// Distribution tables: the triangle T_{n,k} = number of permutations of [n]
// with exactly k occurrences of a pattern, plus the joint variant refined by
// a second statistic, with text / JSON / b-file renderers.
#ifndef MESHDIST_TABLES_HPP
#define MESHDIST_TABLES_HPP

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshdist/ints.hpp"
#include "meshdist/series.hpp"

namespace meshdist {

// Rows are indexed by n starting at 0; rows[n][k] counts permutations of [n]
// with k occurrences.  Trailing zero entries are trimmed (a row is never
// empty: the all-avoider row is {n!}).  `conjectural` marks tables produced
// by a formula that is supported by exhaustive evidence but not proved.
struct DistributionTable {
  std::string pattern_label;
  bool conjectural = false;
  std::vector<std::vector<Int>> rows;

  int n_max() const { return static_cast<int>(rows.size()) - 1; }

  const Int& count(int n, int k) const {
    static const Int kZero(0);
    if (n < 0 || n >= static_cast<int>(rows.size()))
      throw std::out_of_range("row index outside table");
    const auto& row = rows[static_cast<std::size_t>(n)];
    if (k < 0 || k >= static_cast<int>(row.size())) return kZero;
    return row[static_cast<std::size_t>(k)];
  }

  Int row_sum(int n) const {
    if (n < 0 || n >= static_cast<int>(rows.size()))
      throw std::out_of_range("row index outside table");
    Int s(0);
    for (const Int& v : rows[static_cast<std::size_t>(n)]) s += v;
    return s;
  }
};

inline void trim_row(std::vector<Int>& row) {
  while (row.size() > 1 && row.back() == 0) row.pop_back();
  if (row.empty()) row.push_back(Int(0));
}

inline void normalize(DistributionTable& table) {
  for (auto& row : table.rows) trim_row(row);
}

// Reads the triangle out of a power series whose x^n coefficient is the row
// polynomial in q.
inline DistributionTable table_from_series(const TruncatedSeries& series,
                                           int n_max,
                                           std::string pattern_label,
                                           bool conjectural = false) {
  if (n_max < 0 || n_max > series.order())
    throw std::invalid_argument("table range exceeds series order");
  DistributionTable t;
  t.pattern_label = std::move(pattern_label);
  t.conjectural = conjectural;
  t.rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) t.rows.push_back(series.at(n).q_coefficients());
  normalize(t);
  return t;
}

// --- joint tables -----------------------------------------------------------

// counts[n][k][d]: permutations of [n] with k occurrences of the primary
// pattern and d of the secondary statistic.
struct JointTable {
  std::string label;
  std::vector<std::vector<std::vector<Int>>> counts;

  int n_max() const { return static_cast<int>(counts.size()) - 1; }
};

inline JointTable joint_table_from_series(const TruncatedSeries& series,
                                          int n_max, std::string label) {
  if (n_max < 0 || n_max > series.order())
    throw std::invalid_argument("table range exceeds series order");
  JointTable t;
  t.label = std::move(label);
  t.counts.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const QPoly& p = series.at(n);
    int qd = std::max(p.q_degree(), 0);
    int td = std::max(p.t_degree(), 0);
    std::vector<std::vector<Int>> slice(
        static_cast<std::size_t>(qd) + 1,
        std::vector<Int>(static_cast<std::size_t>(td) + 1, Int(0)));
    for (int i = 0; i <= qd; ++i)
      for (int j = 0; j <= td; ++j) slice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.at(i, j);
    t.counts.push_back(std::move(slice));
  }
  return t;
}

// --- rendering ---------------------------------------------------------------

inline std::string format_row(const std::vector<Int>& row) {
  std::ostringstream os;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k > 0) os << ' ';
    os << row[k].str();
  }
  return os.str();
}

inline std::string format_table_text(const DistributionTable& table) {
  std::ostringstream os;
  for (const auto& row : table.rows) os << format_row(row) << '\n';
  return os.str();
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string format_table_json(const DistributionTable& table) {
  std::ostringstream os;
  os << "{\"pattern\": \"" << json_escape(table.pattern_label) << "\", ";
  if (table.conjectural) os << "\"conjectural\": true, ";
  os << "\"rows\": [";
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    if (n > 0) os << ", ";
    os << '[';
    for (std::size_t k = 0; k < table.rows[n].size(); ++k) {
      if (k > 0) os << ", ";
      os << table.rows[n][k].str();
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

// One `index value` pair per line for a fixed column of the triangle,
// indexed by n (the OEIS sequence-exchange shape).
inline std::string format_b_file_column(const DistributionTable& table, int k,
                                        int n_min = 1) {
  if (n_min < 0) throw std::invalid_argument("b-file start index negative");
  std::ostringstream os;
  for (int n = n_min; n <= table.n_max(); ++n)
    os << n << ' ' << table.count(n, k).str() << '\n';
  return os.str();
}

// The triangle read row by row from n_min, with a running index from 1.
inline std::string format_b_file_flattened(const DistributionTable& table,
                                           int n_min = 1) {
  if (n_min < 0) throw std::invalid_argument("b-file start index negative");
  std::ostringstream os;
  long index = 1;
  for (int n = n_min; n <= table.n_max(); ++n)
    for (const Int& v : table.rows[static_cast<std::size_t>(n)])
      os << index++ << ' ' << v.str() << '\n';
  return os.str();
}

// One `index value` pair per line for an arbitrary sequence (used for
// series coefficients such as avoider counts).
inline std::string format_b_file_sequence(const std::vector<Int>& values,
                                          int start_index = 0) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i)
    os << start_index + static_cast<int>(i) << ' ' << values[i].str() << '\n';
  return os.str();
}

}  // namespace meshdist

#endif  // MESHDIST_TABLES_HPP
