// Formula-vs-oracle verification: recomputes every registered result with
// the exhaustive enumerator and reports agreement per result, per pattern,
// per n, as JSON lines.  Proved results must match exactly; results flagged
// conjectural report divergence without failing.
#ifndef MESHDIST_VERIFY_HPP
#define MESHDIST_VERIFY_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "meshdist/catalog.hpp"
#include "meshdist/formulas.hpp"
#include "meshdist/oracle.hpp"
#include "meshdist/tables.hpp"

namespace meshdist {

struct VerifyLine {
  std::string tag;
  int nr = 0;  // 0 when the result is not about a catalogued pattern
  std::string pattern;
  int n = 0;
  std::string status;  // "OK" | "MISMATCH" | "CONJECTURE-DIVERGENCE"
  bool has_counterexample = false;
  int k = -1;
  int d = -1;  // secondary statistic coordinate (joint results only)
  Int formula_value;
  Int oracle_value;
};

inline std::string format_verify_line_json(const VerifyLine& line) {
  std::ostringstream os;
  os << "{\"tag\": \"" << line.tag << "\"";
  if (line.nr != 0) os << ", \"nr\": " << line.nr;
  os << ", \"pattern\": \"" << json_escape(line.pattern) << "\", \"n\": "
     << line.n << ", \"status\": \"" << line.status << "\"";
  if (line.has_counterexample) {
    os << ", \"k\": " << line.k;
    if (line.d >= 0) os << ", \"d\": " << line.d;
    os << ", \"formula\": " << line.formula_value.str()
       << ", \"oracle\": " << line.oracle_value.str();
  }
  os << "}";
  return os.str();
}

namespace detail {

inline VerifyLine compare_rows(const ResultInfo& info, int nr,
                               const std::string& label, int n,
                               const std::vector<Int>& formula_row,
                               const std::vector<Int>& oracle_row) {
  VerifyLine line;
  line.tag = info.tag;
  line.nr = nr;
  line.pattern = label;
  line.n = n;
  line.status = "OK";
  std::size_t width = std::max(formula_row.size(), oracle_row.size());
  for (std::size_t k = 0; k < width; ++k) {
    Int f = k < formula_row.size() ? formula_row[k] : Int(0);
    Int o = k < oracle_row.size() ? oracle_row[k] : Int(0);
    if (f != o) {
      line.status = info.conjectural ? "CONJECTURE-DIVERGENCE" : "MISMATCH";
      line.has_counterexample = true;
      line.k = static_cast<int>(k);
      line.formula_value = f;
      line.oracle_value = o;
      break;
    }
  }
  return line;
}

inline std::vector<VerifyLine> verify_joint(const ResultInfo& info, int n_max,
                                            const OracleOptions& options) {
  std::vector<VerifyLine> lines;
  const MeshPattern& pattern = strong_fixed_point_pattern();
  std::string label = format_pattern(pattern);
  TruncatedSeries series = dist_joint_sfp_des(n_max);
  JointTable brute = brute_joint(
      pattern, [](const Permutation& p) { return p.descents(); }, label, n_max,
      options);
  for (int n = 0; n <= n_max; ++n) {
    VerifyLine line;
    line.tag = info.tag;
    line.pattern = label;
    line.n = n;
    line.status = "OK";
    const QPoly& coeff = series.at(n);
    const auto& slice = brute.counts[static_cast<std::size_t>(n)];
    int k_max = std::max(coeff.q_degree(), static_cast<int>(slice.size()) - 1);
    for (int k = 0; k <= k_max && !line.has_counterexample; ++k) {
      int d_bound = coeff.t_degree();
      if (k < static_cast<int>(slice.size()))
        d_bound = std::max(
            d_bound,
            static_cast<int>(slice[static_cast<std::size_t>(k)].size()) - 1);
      for (int d = 0; d <= d_bound; ++d) {
        Int f = coeff.at(k, d);
        Int o(0);
        if (k < static_cast<int>(slice.size()) &&
            d < static_cast<int>(slice[static_cast<std::size_t>(k)].size()))
          o = slice[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
        if (f != o) {
          line.status = info.conjectural ? "CONJECTURE-DIVERGENCE" : "MISMATCH";
          line.has_counterexample = true;
          line.k = k;
          line.d = d;
          line.formula_value = f;
          line.oracle_value = o;
          break;
        }
      }
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace detail

// Verifies one registered result against the oracle up to n_max, producing
// one line per covered pattern per n.
inline std::vector<VerifyLine> verify_tag(const std::string& tag, int n_max,
                                          const OracleOptions& options = {}) {
  const ResultInfo& info = result_lookup(tag);
  if (info.kind == ResultKind::kJoint)
    return detail::verify_joint(info, n_max, options);
  std::vector<VerifyLine> lines;
  DistributionTable formula = dist_by_tag(tag, n_max);
  if (info.nrs.empty()) {
    const MeshPattern& pattern = strong_fixed_point_pattern();
    std::string label = format_pattern(pattern);
    DistributionTable oracle = brute_distribution(pattern, n_max, options);
    for (int n = 0; n <= n_max; ++n)
      lines.push_back(detail::compare_rows(
          info, 0, label, n, formula.rows[static_cast<std::size_t>(n)],
          oracle.rows[static_cast<std::size_t>(n)]));
    return lines;
  }
  for (int nr : info.nrs) {
    const MeshPattern& pattern = catalog_lookup(nr).pattern;
    std::string label = format_pattern(pattern);
    DistributionTable oracle = brute_distribution(pattern, n_max, options);
    for (int n = 0; n <= n_max; ++n)
      lines.push_back(detail::compare_rows(
          info, nr, label, n, formula.rows[static_cast<std::size_t>(n)],
          oracle.rows[static_cast<std::size_t>(n)]));
  }
  return lines;
}

// Every registered result in registry order.
inline std::vector<VerifyLine> verify_all(int n_max,
                                          const OracleOptions& options = {}) {
  std::vector<VerifyLine> lines;
  for (const ResultInfo& info : result_registry()) {
    std::vector<VerifyLine> part = verify_tag(info.tag, n_max, options);
    lines.insert(lines.end(), part.begin(), part.end());
  }
  return lines;
}

inline bool any_proved_mismatch(const std::vector<VerifyLine>& lines) {
  for (const VerifyLine& line : lines)
    if (line.status == "MISMATCH") return true;
  return false;
}

}  // namespace meshdist

#endif  // MESHDIST_VERIFY_HPP
