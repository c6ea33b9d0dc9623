// Exact power-series arithmetic over Z[q,t]: dense bivariate polynomial
// coefficients, truncated series in x with ring operations and reciprocals,
// and the stock series (factorial, Eulerian, Jacobi-type continued fractions)
// the distribution formulas are built from.
#ifndef MESHDIST_SERIES_HPP
#define MESHDIST_SERIES_HPP

#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meshdist/ints.hpp"

namespace meshdist {

// A polynomial in two formal variables q and t with integer coefficients,
// stored densely: coeff_[i][j] is the coefficient of q^i t^j.  The zero
// polynomial is canonically the empty vector, and every mutation re-trims so
// that equality is plain structural comparison.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Int& constant) {
    if (constant != 0) coeff_ = {{constant}};
  }
  explicit QPoly(long constant) : QPoly(Int(constant)) {}

  static QPoly monomial(int q_deg, int t_deg, const Int& c = Int(1)) {
    if (q_deg < 0 || t_deg < 0) throw std::invalid_argument("negative degree");
    QPoly p;
    if (c == 0) return p;
    p.coeff_.assign(static_cast<std::size_t>(q_deg) + 1, {});
    p.coeff_[static_cast<std::size_t>(q_deg)]
        .assign(static_cast<std::size_t>(t_deg) + 1, Int(0));
    p.coeff_[static_cast<std::size_t>(q_deg)][static_cast<std::size_t>(t_deg)] = c;
    return p;
  }
  static QPoly q(int deg = 1) { return monomial(deg, 0); }
  static QPoly t(int deg = 1) { return monomial(0, deg); }

  bool is_zero() const { return coeff_.empty(); }

  // Coefficient of q^i t^j (zero outside the stored support).
  const Int& at(int q_deg, int t_deg) const {
    static const Int kZero(0);
    if (q_deg < 0 || t_deg < 0) return kZero;
    auto i = static_cast<std::size_t>(q_deg);
    auto j = static_cast<std::size_t>(t_deg);
    if (i >= coeff_.size() || j >= coeff_[i].size()) return kZero;
    return coeff_[i][j];
  }

  int q_degree() const { return coeff_.empty() ? -1 : static_cast<int>(coeff_.size()) - 1; }
  int t_degree() const {
    int d = -1;
    for (const auto& row : coeff_)
      if (!row.empty()) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }

  QPoly& operator+=(const QPoly& o) {
    grow_to(o);
    for (std::size_t i = 0; i < o.coeff_.size(); ++i)
      for (std::size_t j = 0; j < o.coeff_[i].size(); ++j)
        coeff_[i][j] += o.coeff_[i][j];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    grow_to(o);
    for (std::size_t i = 0; i < o.coeff_.size(); ++i)
      for (std::size_t j = 0; j < o.coeff_[i].size(); ++j)
        coeff_[i][j] -= o.coeff_[i][j];
    trim();
    return *this;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly& operator*=(const Int& c) {
    if (c == 0) {
      coeff_.clear();
      return *this;
    }
    for (auto& row : coeff_)
      for (auto& v : row) v *= c;
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a) {
    QPoly r = a;
    for (auto& row : r.coeff_)
      for (auto& v : row) v = -v;
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, {});
    for (std::size_t i = 0; i < a.coeff_.size(); ++i)
      for (std::size_t j = 0; j < a.coeff_[i].size(); ++j) {
        if (a.coeff_[i][j] == 0) continue;
        for (std::size_t k = 0; k < b.coeff_.size(); ++k)
          for (std::size_t l = 0; l < b.coeff_[k].size(); ++l) {
            if (b.coeff_[k][l] == 0) continue;
            auto& row = r.coeff_[i + k];
            if (row.size() <= j + l) row.resize(j + l + 1, Int(0));
            row[j + l] += a.coeff_[i][j] * b.coeff_[k][l];
          }
      }
    r.trim();
    return r;
  }
  friend QPoly operator*(QPoly a, const Int& c) { return a *= c; }
  friend QPoly operator*(const Int& c, QPoly a) { return a *= c; }

  bool operator==(const QPoly& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // Substitutions used when specialising a joint distribution to a marginal.
  QPoly with_q_one() const {
    QPoly r;
    for (const auto& row : coeff_) {
      QPoly term;
      term.coeff_ = row.empty() ? std::vector<std::vector<Int>>{}
                                : std::vector<std::vector<Int>>{row};
      term.trim();
      r += term;
    }
    return r;
  }
  QPoly with_t_one() const {
    QPoly r;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      Int sum(0);
      for (const auto& v : coeff_[i]) sum += v;
      r += monomial(static_cast<int>(i), 0, sum);
    }
    return r;
  }
  Int value_at_one() const {
    Int sum(0);
    for (const auto& row : coeff_)
      for (const auto& v : row) sum += v;
    return sum;
  }

  // Multiplies by q^dq (used when rescaling a series variable by a power
  // of q).
  QPoly shifted_q(int dq) const {
    if (is_zero() || dq == 0) return *this;
    QPoly r;
    r.coeff_.assign(coeff_.size() + static_cast<std::size_t>(dq), {});
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      r.coeff_[i + static_cast<std::size_t>(dq)] = coeff_[i];
    return r;
  }

  // Coefficients of q^0..q^deg with t absent; throws if t actually occurs.
  std::vector<Int> q_coefficients() const {
    if (t_degree() > 0) throw std::logic_error("polynomial involves t");
    std::vector<Int> out(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      out[i] = coeff_[i].empty() ? Int(0) : coeff_[i][0];
    if (out.empty()) out.push_back(Int(0));
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
        const Int& c = coeff_[i][j];
        if (c == 0) continue;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
          if (c < 0) os << "-";
          first = false;
        } else {
          os << (c < 0 ? " - " : " + ");
        }
        bool has_var = i > 0 || j > 0;
        if (abs != 1 || !has_var) os << abs.str();
        if (abs != 1 && has_var) os << "*";
        if (i > 0) {
          os << "q";
          if (i > 1) os << "^" << i;
          if (j > 0) os << "*";
        }
        if (j > 0) {
          os << "t";
          if (j > 1) os << "^" << j;
        }
      }
    return os.str();
  }

 private:
  void grow_to(const QPoly& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size());
    for (std::size_t i = 0; i < o.coeff_.size(); ++i)
      if (coeff_[i].size() < o.coeff_[i].size())
        coeff_[i].resize(o.coeff_[i].size(), Int(0));
  }
  void trim() {
    for (auto& row : coeff_)
      while (!row.empty() && row.back() == 0) row.pop_back();
    while (!coeff_.empty() && coeff_.back().empty()) coeff_.pop_back();
  }

  std::vector<std::vector<Int>> coeff_;
};

// A power series in x truncated at a fixed order: coefficients are QPoly
// values for x^0 .. x^order.  All binary operations insist on matching
// orders, which keeps silent precision loss out of the formula code.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order)
      : order_(check_order(order)),
        coeff_(static_cast<std::size_t>(order) + 1) {}
  TruncatedSeries(int order, std::function<QPoly(int)> coefficient)
      : TruncatedSeries(order) {
    for (int n = 0; n <= order_; ++n)
      coeff_[static_cast<std::size_t>(n)] = coefficient(n);
  }

  static TruncatedSeries constant(int order, const QPoly& c) {
    TruncatedSeries s(order);
    s.coeff_[0] = c;
    return s;
  }
  static TruncatedSeries one(int order) { return constant(order, QPoly(1)); }
  static TruncatedSeries x(int order, int power = 1, const QPoly& c = QPoly(1)) {
    TruncatedSeries s(order);
    if (power < 0) throw std::invalid_argument("negative power of x");
    if (power <= order) s.coeff_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  int order() const { return order_; }

  const QPoly& at(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("series coefficient index");
    return coeff_[static_cast<std::size_t>(n)];
  }
  void set(int n, QPoly value) {
    if (n < 0 || n > order_) throw std::out_of_range("series coefficient index");
    coeff_[static_cast<std::size_t>(n)] = std::move(value);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_same(o);
    for (std::size_t n = 0; n < coeff_.size(); ++n) coeff_[n] += o.coeff_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_same(o);
    for (std::size_t n = 0; n < coeff_.size(); ++n) coeff_[n] -= o.coeff_[n];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.order_);
    for (std::size_t n = 0; n < a.coeff_.size(); ++n) r.coeff_[n] = -a.coeff_[n];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.check_same(b);
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.coeff_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= a.order_; ++j)
        r.coeff_[static_cast<std::size_t>(i + j)] +=
            a.coeff_[static_cast<std::size_t>(i)] *
            b.coeff_[static_cast<std::size_t>(j)];
    }
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const QPoly& c) {
    TruncatedSeries r(a.order_);
    for (std::size_t n = 0; n < a.coeff_.size(); ++n) r.coeff_[n] = a.coeff_[n] * c;
    return r;
  }
  friend TruncatedSeries operator*(const QPoly& c, const TruncatedSeries& a) {
    return a * c;
  }

  bool operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && coeff_ == o.coeff_;
  }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

  // Multiplicative inverse; defined exactly when the constant term is a unit
  // of Z[q,t], i.e. +1 or -1.
  TruncatedSeries reciprocal() const {
    const QPoly& a0 = coeff_[0];
    if (a0 != QPoly(1) && a0 != QPoly(-1))
      throw std::invalid_argument(
          "reciprocal requires a constant term of +1 or -1");
    TruncatedSeries r(order_);
    r.coeff_[0] = a0;  // +-1 is its own inverse
    for (int n = 1; n <= order_; ++n) {
      QPoly acc;
      for (int m = 1; m <= n; ++m)
        acc += coeff_[static_cast<std::size_t>(m)] *
               r.coeff_[static_cast<std::size_t>(n - m)];
      r.coeff_[static_cast<std::size_t>(n)] = -(a0 * acc);
    }
    return r;
  }

  TruncatedSeries pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative series exponent");
    TruncatedSeries r = one(order_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // x -> q^j x: the coefficient of x^n picks up a factor q^(j*n).
  TruncatedSeries scale_x_by_q_power(int j) const {
    if (j < 0) throw std::invalid_argument("negative q power");
    TruncatedSeries r(order_);
    for (int n = 0; n <= order_; ++n)
      r.coeff_[static_cast<std::size_t>(n)] =
          coeff_[static_cast<std::size_t>(n)].shifted_q(j * n);
    return r;
  }

  TruncatedSeries with_q_one() const {
    TruncatedSeries r(order_);
    for (std::size_t n = 0; n < coeff_.size(); ++n)
      r.coeff_[n] = coeff_[n].with_q_one();
    return r;
  }
  TruncatedSeries with_t_one() const {
    TruncatedSeries r(order_);
    for (std::size_t n = 0; n < coeff_.size(); ++n)
      r.coeff_[n] = coeff_[n].with_t_one();
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    for (int n = 0; n <= order_; ++n) {
      if (n > 0) os << "\n";
      os << "[x^" << n << "] " << at(n).str();
    }
    return os.str();
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return order;
  }
  void check_same(const TruncatedSeries& o) const {
    if (order_ != o.order_)
      throw std::logic_error("series truncation orders differ");
  }

  int order_ = 0;
  std::vector<QPoly> coeff_ = {QPoly()};
};

// Sum of n! x^n: the generating function of all permutations.
inline TruncatedSeries factorial_series(int order) {
  return TruncatedSeries(order, [](int n) { return QPoly(factorial(n)); });
}

// Eulerian polynomials by descents: E(n,d) permutations of [n] with d
// descents, so the x^n coefficient is 1, 1, 1+t, 1+4t+t^2, ...
inline TruncatedSeries eulerian_series(int order) {
  std::vector<std::vector<Int>> e(static_cast<std::size_t>(order) + 1);
  e[0] = {Int(1)};
  for (int n = 1; n <= order; ++n) {
    const auto& prev = e[static_cast<std::size_t>(n - 1)];
    e[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), Int(0));
    for (int d = 0; d < n; ++d) {
      Int v(0);
      if (d < static_cast<int>(prev.size()))
        v += Int(d + 1) * prev[static_cast<std::size_t>(d)];
      if (d > 0 && d - 1 < static_cast<int>(prev.size()))
        v += Int(n - d) * prev[static_cast<std::size_t>(d - 1)];
      e[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)] = v;
    }
  }
  return TruncatedSeries(order, [&e](int n) {
    QPoly p;
    for (std::size_t d = 0; d < e[static_cast<std::size_t>(n)].size(); ++d)
      p += QPoly::monomial(0, static_cast<int>(d), e[static_cast<std::size_t>(n)][d]);
    return p;
  });
}

// Continued fraction of the shape
//   1 / (1 - w_0(x) / (1 - w_1(x) / (1 - ...)))
// where level j contributes w_j(x) = weight(j) * x.  Levels below the
// truncation order cannot influence the kept coefficients because each level
// carries a factor of x, so evaluating order+1 levels bottom-up is exact.
inline TruncatedSeries continued_fraction_series(
    int order, const std::function<QPoly(int)>& weight) {
  TruncatedSeries tail = TruncatedSeries::one(order);
  for (int j = order; j >= 0; --j) {
    TruncatedSeries level =
        TruncatedSeries::one(order) -
        TruncatedSeries::x(order, 1, weight(j)) * tail;
    tail = level.reciprocal();
  }
  return tail;
}

}  // namespace meshdist

#endif  // MESHDIST_SERIES_HPP
