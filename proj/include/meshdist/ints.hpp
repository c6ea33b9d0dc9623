// Exact integer arithmetic used throughout the library.
//
// Counts and series coefficients are kept in arbitrary precision even though
// everything reachable from the CLI fits in 64 bits; convolutions of q-polynomials
// are the one place where intermediate values can grow past machine words, and a
// single integer type everywhere keeps the modules composable.
#ifndef MESHDIST_INTS_HPP
#define MESHDIST_INTS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace meshdist {

using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Narrowing helper for serializers that need a machine integer.
inline std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace meshdist

#endif  // MESHDIST_INTS_HPP
