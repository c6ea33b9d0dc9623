// Closed forms, generating functions, and recurrences for the catalogued
// pattern distributions, plus the registry of result tags that names each
// implemented result.  Every function here is independently checkable
// against the exhaustive oracle; the test suite does exactly that.
#ifndef MESHDIST_FORMULAS_HPP
#define MESHDIST_FORMULAS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshdist/catalog.hpp"
#include "meshdist/ints.hpp"
#include "meshdist/series.hpp"
#include "meshdist/tables.hpp"

namespace meshdist {

// --- building blocks ---------------------------------------------------------

namespace detail {

inline QPoly one_minus_q() { return QPoly(1) - QPoly::q(); }

// 1 + q + ... + q^d
inline QPoly q_geometric(int d) {
  QPoly p;
  for (int i = 0; i <= d; ++i) p += QPoly::q(i);
  return p;
}

}  // namespace detail

// Generating function of strong-fixed-point avoiders: A(x) = F(x)/(1+xF(x)),
// with coefficients 1, 0, 1, 3, 14, ...
inline TruncatedSeries sfp_avoidance_gf(int order) {
  TruncatedSeries f = factorial_series(order);
  return f * (TruncatedSeries::one(order) + TruncatedSeries::x(order) * f)
                 .reciprocal();
}

// Distribution of the number of strong fixed points over S_n:
// F(x,q) = F(x) / (1 + x(1-q)F(x)).
inline TruncatedSeries dist_strong_fixed_points(int order) {
  TruncatedSeries f = factorial_series(order);
  TruncatedSeries denom =
      TruncatedSeries::one(order) +
      TruncatedSeries::x(order, 1, detail::one_minus_q()) * f;
  return f * denom.reciprocal();
}

// Distribution of plain ascent pairs (pattern nr 1, the empty shading):
// the x^n coefficient is (1+q)(1+q+q^2)...(1+...+q^(n-1)), i.e. the
// distribution of inversions read backwards (it is symmetric).
inline TruncatedSeries dist_inversions(int order) {
  return TruncatedSeries(order, [](int n) {
    QPoly p(1);
    for (int i = 1; i < n; ++i) p *= detail::q_geometric(i);
    return p;
  });
}

// --- rows with closed-form support (patterns whose distribution is
// --- concentrated on at most two values of k) --------------------------------

// Row T_{n, .} for the patterns with elementary exact rows.
inline std::vector<Int> dist_trivial(int nr, int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::vector<Int> row{Int(1)};
  if (n == 0) return row;
  switch (nr) {
    case 5: {
      // occurrences = n - first letter, each class of size (n-1)!
      row.assign(static_cast<std::size_t>(n), factorial(n - 1));
      return row;
    }
    case 10: {
      // avoiders and single-occurrence permutations split S_n in half
      if (n == 1) return row;
      row = {factorial(n) / 2, factorial(n) / 2};
      return row;
    }
    case 11: {
      // only the length-2 identity contains the fully shaded ascent
      if (n == 1) return row;
      if (n == 2) return {Int(1), Int(1)};
      return {factorial(n)};
    }
    case 12: {
      // permutations starting with 1 contain n-1 occurrences; all others avoid
      if (n == 1) return row;
      row.assign(static_cast<std::size_t>(n), Int(0));
      row[0] = factorial(n) - factorial(n - 1);
      row[static_cast<std::size_t>(n - 1)] = factorial(n - 1);
      return row;
    }
    case 13: {
      if (n == 1) return row;
      Int t1 = factorial(n - 2);
      return {factorial(n) - t1, t1};
    }
    case 18: {
      if (n == 1) return row;
      Int t1(0);
      for (int i = 1; i <= n - 1; ++i) t1 += factorial(n - 1) / i;
      return {factorial(n) - t1, t1};
    }
    case 19: {
      if (n == 1) return row;
      Int t1(0);
      for (int i = 0; i <= n - 2; ++i) t1 += factorial(i) * factorial(n - i - 1);
      return {factorial(n) - t1, t1};
    }
    case 20: {
      if (n == 1) return row;
      Int t1(0);
      for (int i = 1; i <= n - 1; ++i)
        t1 += factorial(i - 1) * factorial(n - i - 1);
      return {factorial(n) - t1, t1};
    }
    case 21: {
      if (n == 1) return row;
      Int t1(0);
      for (int beta = 2; beta <= n; ++beta)
        for (int alpha = 1; alpha <= beta - 1; ++alpha)
          t1 += factorial(n - beta) * factorial(alpha - 1) *
                factorial(beta - alpha - 1) * binomial(beta - 1, alpha);
      return {factorial(n) - t1, t1};
    }
    case 22: {
      if (n == 1) return row;
      Int t1(0);
      for (int i = 0; i <= n - 2; ++i)
        for (int l = 0; l <= i; ++l)
          t1 += factorial(l) * factorial(i - l) * factorial(n - 2 - i);
      return {factorial(n) - t1, t1};
    }
    default:
      throw std::invalid_argument("no closed row form for nr=" +
                                  std::to_string(nr));
  }
}

// --- generating functions ----------------------------------------------------

// F(x,q) for the patterns enumerated by a rational or sum-of-products
// generating function.
inline TruncatedSeries dist_gf(int nr, int order) {
  const TruncatedSeries one = TruncatedSeries::one(order);
  const TruncatedSeries f = factorial_series(order);
  const QPoly omq = detail::one_minus_q();
  switch (nr) {
    case 16: {
      // sum over the number i of left-to-right minima chains:
      // q^C(i,2) x^i * prod_{j=0}^{i} A(q^j x)
      TruncatedSeries a = sfp_avoidance_gf(order);
      TruncatedSeries sum(order);
      TruncatedSeries prod = a;
      for (int i = 0; i <= order; ++i) {
        if (i > 0) prod = prod * a.scale_x_by_q_power(i);
        int choose2 = i * (i - 1) / 2;
        sum += TruncatedSeries::x(order, i, QPoly::q(choose2)) * prod;
      }
      return sum;
    }
    case 17: {
      TruncatedSeries denom =
          one + TruncatedSeries::x(order, 1, omq) * f;
      return (one - TruncatedSeries::x(order) +
              TruncatedSeries::x(order) * denom.reciprocal()) *
             f;
    }
    case 27: {
      TruncatedSeries denom =
          one + TruncatedSeries::x(order, 1, omq) * f;
      return f - TruncatedSeries::x(order, 2, omq) * f.pow(3) *
                     denom.reciprocal();
    }
    case 28: {
      return f *
             (one + TruncatedSeries::x(order, 2, omq) * f * f).reciprocal();
    }
    case 30: {
      TruncatedSeries numer = (one + TruncatedSeries::x(order, 1, omq)) * f;
      TruncatedSeries denom = one + TruncatedSeries::x(order, 1, omq) +
                              TruncatedSeries::x(order, 2, omq) * f;
      return numer * denom.reciprocal();
    }
    case 33: {
      // sum over the number i of isolated points: q^C(i,2) x^i A(x)^{i+1}
      TruncatedSeries a = sfp_avoidance_gf(order);
      TruncatedSeries sum(order);
      TruncatedSeries apow = a;
      for (int i = 0; i <= order; ++i) {
        if (i > 0) apow = apow * a;
        int choose2 = i * (i - 1) / 2;
        sum += TruncatedSeries::x(order, i, QPoly::q(choose2)) * apow;
      }
      return sum;
    }
    case 34: {
      return f * (one + TruncatedSeries::x(order, 2, omq) * f).reciprocal();
    }
    case 55:
    case 56: {
      return f *
             (one + TruncatedSeries::x(order, 1, omq) * (f - one)).reciprocal();
    }
    case 63:
    case 64:
    case 65: {
      QPoly two_minus_q = QPoly(2) - QPoly::q();
      QPoly q_minus_1 = QPoly::q() - QPoly(1);
      TruncatedSeries numer =
          f * two_minus_q + TruncatedSeries::constant(order, q_minus_1);
      TruncatedSeries denom =
          f * omq + TruncatedSeries::constant(order, QPoly::q());
      return numer * denom.reciprocal();
    }
    default:
      throw std::invalid_argument("no generating function for nr=" +
                                  std::to_string(nr));
  }
}

// --- recurrences -------------------------------------------------------------

namespace detail {

inline const Int& cell(const std::vector<Int>& row, int k) {
  static const Int kZero(0);
  if (k < 0 || k >= static_cast<int>(row.size())) return kZero;
  return row[static_cast<std::size_t>(k)];
}

}  // namespace detail

// Coefficients of (x+1)(x+2)...(x+n-1): unsigned Stirling numbers of the
// first kind, computed by plain polynomial multiplication.
inline std::vector<Int> stirling_first_kind_row(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::vector<Int> poly{Int(1)};
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<Int> next(poly.size() + 1, Int(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d] * i;   // constant-term contribution
      next[d + 1] += poly[d];   // times x
    }
    poly = std::move(next);
  }
  return poly;
}

// Table built from the row recurrences.  Out-of-range k terms contribute 0.
inline DistributionTable dist_recurrence(int nr, int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative n_max");
  bool known = nr == 8 || nr == 9 || nr == 14 || nr == 15 || nr == 36 || nr == 45;
  if (!known)
    throw std::invalid_argument("no recurrence for nr=" + std::to_string(nr));
  DistributionTable t;
  t.pattern_label = format_pattern(catalog_lookup(nr).pattern);
  t.rows.push_back({Int(1)});
  if (n_max >= 1) t.rows.push_back({Int(1)});
  if (nr == 8 || nr == 9) {
    // T_{n,k} = T_{n-1,k-1} + (n-1) T_{n-1,k}
    for (int n = 2; n <= n_max; ++n) {
      const auto& prev = t.rows.back();
      std::vector<Int> row(static_cast<std::size_t>(n), Int(0));
      for (int k = 0; k < n; ++k)
        row[static_cast<std::size_t>(k)] =
            detail::cell(prev, k - 1) + Int(n - 1) * detail::cell(prev, k);
      t.rows.push_back(std::move(row));
    }
  } else {
    if (n_max >= 2) t.rows.push_back({Int(1), Int(1)});
    for (int n = 3; n <= n_max; ++n) {
      const auto& p1 = t.rows[static_cast<std::size_t>(n - 1)];
      const auto& p2 = t.rows[static_cast<std::size_t>(n - 2)];
      std::vector<Int> row(static_cast<std::size_t>(n), Int(0));
      for (int k = 0; k < n; ++k) {
        Int v(0);
        if (nr == 14 || nr == 15) {
          // T_{n,k} = T_{n-1,k-1} + (k+1) T_{n-1,k+1} + (n-k-1) T_{n-1,k}
          v = detail::cell(p1, k - 1) + Int(k + 1) * detail::cell(p1, k + 1) +
              Int(n - k - 1) * detail::cell(p1, k);
        } else if (nr == 36) {
          // T_{n,k} = (k+1) T_{n-1,k+1} + (n-k) T_{n-1,k}
          //           - T_{n-2,k} + T_{n-2,k-1}
          v = Int(k + 1) * detail::cell(p1, k + 1) +
              Int(n - k) * detail::cell(p1, k) - detail::cell(p2, k) +
              detail::cell(p2, k - 1);
        } else {
          // nr 45:
          // T_{n,k} = (k+1) T_{n-1,k+1} + (n-k-1) T_{n-1,k} + T_{n-1,k-1}
          //         + (k+1) T_{n-2,k+1} + (n-2k-2) T_{n-2,k}
          //         - (n-k-1) T_{n-2,k-1}
          v = Int(k + 1) * detail::cell(p1, k + 1) +
              Int(n - k - 1) * detail::cell(p1, k) + detail::cell(p1, k - 1) +
              Int(k + 1) * detail::cell(p2, k + 1) +
              Int(n - 2 * k - 2) * detail::cell(p2, k) -
              Int(n - k - 1) * detail::cell(p2, k - 1);
        }
        row[static_cast<std::size_t>(k)] = v;
      }
      t.rows.push_back(std::move(row));
    }
  }
  if (static_cast<int>(t.rows.size()) > n_max + 1)
    t.rows.resize(static_cast<std::size_t>(n_max) + 1);
  normalize(t);
  return t;
}

namespace detail {

// Row polynomials as coefficient vectors in x (index = power).
inline std::vector<Int> poly_derivative(const std::vector<Int>& p) {
  std::vector<Int> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Int(static_cast<long>(i)) * p[i]);
  if (d.empty()) d.push_back(Int(0));
  return d;
}

inline std::vector<Int> poly_add(std::vector<Int> a, const std::vector<Int>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline std::vector<Int> poly_mul(const std::vector<Int>& a,
                                 const std::vector<Int>& b) {
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<Int> poly_scale(std::vector<Int> a, const Int& c) {
  for (auto& v : a) v *= c;
  return a;
}

}  // namespace detail

// Second route to the nr 45 table, working on whole row polynomials:
// T_n(x) = (x+n-1) T_{n-1}(x) + (1-x) T'_{n-1}(x)
//        + (n-2)(1-x) T_{n-2}(x) + (1-x)^2 T'_{n-2}(x).
inline DistributionTable dist_recurrence45_alt(int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative n_max");
  using detail::poly_add;
  using detail::poly_derivative;
  using detail::poly_mul;
  using detail::poly_scale;
  DistributionTable t;
  t.pattern_label = format_pattern(catalog_lookup(45).pattern);
  t.rows.push_back({Int(1)});
  if (n_max >= 1) t.rows.push_back({Int(1)});
  if (n_max >= 2) t.rows.push_back({Int(1), Int(1)});
  const std::vector<Int> one_minus_x{Int(1), Int(-1)};
  for (int n = 3; n <= n_max; ++n) {
    const auto& t1 = t.rows[static_cast<std::size_t>(n - 1)];
    const auto& t2 = t.rows[static_cast<std::size_t>(n - 2)];
    std::vector<Int> row =
        poly_mul({Int(n - 1), Int(1)}, t1);                      // (x+n-1)T_{n-1}
    row = poly_add(std::move(row), poly_mul(one_minus_x, poly_derivative(t1)));
    row = poly_add(std::move(row),
                   poly_scale(poly_mul(one_minus_x, t2), Int(n - 2)));
    row = poly_add(std::move(row),
                   poly_mul(poly_mul(one_minus_x, one_minus_x),
                            poly_derivative(t2)));
    t.rows.push_back(std::move(row));
  }
  normalize(t);
  return t;
}

// Companion triangle for nr 45: B_{n,k} counts the permutations of [n] that
// begin with 1 and have k occurrences.  B_{n,k} = B_{n-1,k-1} + T_{n-1,k}
// - B_{n-1,k}, seeded B_{1,0}=1, B_{2,0}=0, B_{2,1}=1.
inline DistributionTable helper_table_45(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  DistributionTable full = dist_recurrence(45, n_max);
  DistributionTable b;
  b.pattern_label = full.pattern_label;
  b.rows.push_back({Int(0)});  // no permutation of [0] begins with 1
  b.rows.push_back({Int(1)});
  if (n_max >= 2) b.rows.push_back({Int(0), Int(1)});
  for (int n = 3; n <= n_max; ++n) {
    const auto& bp = b.rows[static_cast<std::size_t>(n - 1)];
    const auto& tp = full.rows[static_cast<std::size_t>(n - 1)];
    std::vector<Int> row(static_cast<std::size_t>(n), Int(0));
    for (int k = 0; k < n; ++k)
      row[static_cast<std::size_t>(k)] = detail::cell(bp, k - 1) +
                                         detail::cell(tp, k) -
                                         detail::cell(bp, k);
    b.rows.push_back(std::move(row));
  }
  normalize(b);
  return b;
}

// --- continued fraction ------------------------------------------------------

// 1/(1 - (r0 x + s0 x y)/(1 - (r1 x + s1 x y)/(1 - ...))) with the marking
// variable y stored in the q slot of the coefficients.
inline TruncatedSeries delta_cf_series(const std::vector<Int>& r,
                                       const std::vector<Int>& s, int order) {
  if (static_cast<int>(r.size()) < order + 1 ||
      static_cast<int>(s.size()) < order + 1)
    throw std::invalid_argument(
        "continued-fraction weight sequences need order+1 terms");
  return continued_fraction_series(order, [&r, &s](int j) {
    return QPoly(r[static_cast<std::size_t>(j)]) +
           QPoly::monomial(1, 0, s[static_cast<std::size_t>(j)]);
  });
}

// Conjectured distribution for pattern nr 3: the continued fraction with
// weights r = (1,0,2,1,3,2,...), s = (0,1,0,1,...).  Supported by exhaustive
// checks at small n; reported as conjectural everywhere.
inline TruncatedSeries dist_conjecture_nr3(int order) {
  std::vector<Int> r, s;
  for (int j = 0; j <= order; ++j) {
    int m = j / 2;
    r.push_back(Int(j % 2 == 0 ? m + 1 : m));
    s.push_back(Int(j % 2));
  }
  return delta_cf_series(r, s, order);
}

// --- joint distribution ------------------------------------------------------

// Joint distribution of (strong fixed points, descents):
// F(x,q,t) = F(x,t) / (1 + x(1-q)F(x,t)) with F(x,t) the Eulerian series.
inline TruncatedSeries dist_joint_sfp_des(int order) {
  TruncatedSeries ft = eulerian_series(order);
  TruncatedSeries denom =
      TruncatedSeries::one(order) +
      TruncatedSeries::x(order, 1, detail::one_minus_q()) * ft;
  return ft * denom.reciprocal();
}

// Strong-fixed-point avoiders refined by descents:
// G(x,t) = F(x,t)/(1 + x F(x,t)).
inline TruncatedSeries sfp_avoidance_by_descents_gf(int order) {
  TruncatedSeries ft = eulerian_series(order);
  return ft *
         (TruncatedSeries::one(order) + TruncatedSeries::x(order) * ft)
             .reciprocal();
}

// --- result registry ---------------------------------------------------------

enum class ResultKind {
  kGeneratingFunction,
  kClosedRow,
  kRecurrence,
  kRowProduct,
  kContinuedFraction,
  kJoint,
};

inline std::string to_string(ResultKind k) {
  switch (k) {
    case ResultKind::kGeneratingFunction: return "generating-function";
    case ResultKind::kClosedRow: return "closed-row";
    case ResultKind::kRecurrence: return "recurrence";
    case ResultKind::kRowProduct: return "row-product";
    case ResultKind::kContinuedFraction: return "continued-fraction";
    case ResultKind::kJoint: return "joint-generating-function";
  }
  throw std::logic_error("unreachable");
}

// A stable identifier for one implemented result, the catalogued patterns it
// covers, and how the computation works.
struct ResultInfo {
  std::string tag;
  std::vector<int> nrs;  // empty for results about the length-1 pattern
  ResultKind kind = ResultKind::kGeneratingFunction;
  bool conjectural = false;
};

inline const std::vector<ResultInfo>& result_registry() {
  using K = ResultKind;
  static const std::vector<ResultInfo> entries = {
      {"T1.1", {}, K::kGeneratingFunction, false},
      {"EQ1", {1}, K::kRowProduct, false},
      {"T2.1", {5}, K::kClosedRow, false},
      {"T2.2", {10}, K::kClosedRow, false},
      {"T2.3", {11}, K::kClosedRow, false},
      {"T2.4", {12}, K::kClosedRow, false},
      {"T2.5", {13}, K::kClosedRow, false},
      {"T2.6", {18}, K::kClosedRow, false},
      {"T2.7", {19}, K::kClosedRow, false},
      {"T2.8", {20}, K::kClosedRow, false},
      {"T2.9", {21}, K::kClosedRow, false},
      {"T2.10", {22}, K::kClosedRow, false},
      {"T3.1", {16}, K::kGeneratingFunction, false},
      {"T3.2", {17}, K::kGeneratingFunction, false},
      {"T3.3", {27}, K::kGeneratingFunction, false},
      {"T3.4", {28}, K::kGeneratingFunction, false},
      {"T3.5", {30}, K::kGeneratingFunction, false},
      {"T3.6", {33}, K::kGeneratingFunction, false},
      {"T3.7", {34}, K::kGeneratingFunction, false},
      {"T3.8", {55}, K::kGeneratingFunction, false},
      {"T3.9", {56}, K::kGeneratingFunction, false},
      {"T3.10", {63}, K::kGeneratingFunction, false},
      {"T3.11", {64}, K::kGeneratingFunction, false},
      {"T3.12", {65}, K::kGeneratingFunction, false},
      {"T4.1", {8, 9}, K::kRecurrence, false},
      {"T4.2", {14, 15}, K::kRecurrence, false},
      {"T4.3", {36}, K::kRecurrence, false},
      {"T4.4", {45}, K::kRecurrence, false},
      {"C6.1", {3}, K::kContinuedFraction, true},
      {"J6", {}, K::kJoint, false},
  };
  return entries;
}

inline const ResultInfo& result_lookup(const std::string& tag) {
  for (const ResultInfo& e : result_registry())
    if (e.tag == tag) return e;
  throw std::invalid_argument("unknown result tag: " + tag);
}

// The patterns a registry entry talks about (the length-1 strong-fixed-point
// pattern for the entries with no catalogue number).
inline std::vector<MeshPattern> result_patterns(const ResultInfo& info) {
  std::vector<MeshPattern> out;
  if (info.nrs.empty()) {
    out.push_back(strong_fixed_point_pattern());
  } else {
    for (int nr : info.nrs) out.push_back(catalog_lookup(nr).pattern);
  }
  return out;
}

// Distribution table computed by the result with the given tag (every tag
// except the joint one, which is not a single-variable table).
inline DistributionTable dist_by_tag(const std::string& tag, int n_max) {
  const ResultInfo& info = result_lookup(tag);
  std::string label = format_pattern(result_patterns(info).front());
  switch (info.kind) {
    case ResultKind::kGeneratingFunction: {
      TruncatedSeries s = info.nrs.empty()
                              ? dist_strong_fixed_points(n_max)
                              : dist_gf(info.nrs.front(), n_max);
      return table_from_series(s, n_max, label);
    }
    case ResultKind::kRowProduct:
      return table_from_series(dist_inversions(n_max), n_max, label);
    case ResultKind::kClosedRow: {
      DistributionTable t;
      t.pattern_label = label;
      for (int n = 0; n <= n_max; ++n)
        t.rows.push_back(dist_trivial(info.nrs.front(), n));
      normalize(t);
      return t;
    }
    case ResultKind::kRecurrence: {
      DistributionTable t = dist_recurrence(info.nrs.front(), n_max);
      t.pattern_label = label;
      return t;
    }
    case ResultKind::kContinuedFraction: {
      DistributionTable t =
          table_from_series(dist_conjecture_nr3(n_max), n_max, label, true);
      return t;
    }
    case ResultKind::kJoint:
      throw std::invalid_argument(
          "tag names a joint distribution; use dist_joint_sfp_des");
  }
  throw std::logic_error("unreachable");
}

// The canonical formula route for a catalogued pattern, or an error for the
// patterns whose enumeration is unknown.
inline const ResultInfo& result_for_nr(int nr) {
  for (const ResultInfo& e : result_registry())
    for (int covered : e.nrs)
      if (covered == nr) return e;
  throw std::invalid_argument("no implemented enumeration for nr=" +
                              std::to_string(nr));
}

inline bool has_formula_for_nr(int nr) {
  for (const ResultInfo& e : result_registry())
    for (int covered : e.nrs)
      if (covered == nr) return true;
  return false;
}

inline DistributionTable dist_formula_for_nr(int nr, int n_max) {
  DistributionTable t = dist_by_tag(result_for_nr(nr).tag, n_max);
  t.pattern_label = format_pattern(catalog_lookup(nr).pattern);
  return t;
}

// Occurrence counts of a length-2 pattern are bounded by the number of pairs,
// so a distribution series must satisfy deg_q([x^n]) <= C(n,2) + n (the +n
// is slack for the length-1 pattern, whose count is bounded by n).
inline bool occurrence_degree_bound_holds(const TruncatedSeries& s) {
  for (int n = 0; n <= s.order(); ++n)
    if (s.at(n).q_degree() > n * (n - 1) / 2 + n) return false;
  return true;
}

}  // namespace meshdist

#endif  // MESHDIST_FORMULAS_HPP
