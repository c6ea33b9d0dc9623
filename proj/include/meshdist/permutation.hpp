// Permutations in one-line notation: parsing, formatting, reduction,
// elementary statistics, symmetry maps, and lexicographic enumeration.
#ifndef MESHDIST_PERMUTATION_HPP
#define MESHDIST_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshdist {

// A permutation of {1..n} in one-line notation. n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  // 1-based access: at(i) is the letter in position i.
  int at(int pos) const { return word_.at(static_cast<std::size_t>(pos - 1)); }
  const std::vector<int>& word() const { return word_; }

  // Position (1-based) of a value.
  int position_of(int value) const {
    for (int i = 1; i <= size(); ++i)
      if (at(i) == value) return i;
    throw std::out_of_range("value not present in permutation");
  }

  int descents() const {
    int d = 0;
    for (int i = 1; i < size(); ++i)
      if (at(i) > at(i + 1)) ++d;
    return d;
  }

  Permutation reversed() const {
    std::vector<int> w(word_.rbegin(), word_.rend());
    return Permutation(std::move(w));
  }

  Permutation complemented() const {
    std::vector<int> w(word_);
    for (int& v : w) v = size() + 1 - v;
    return Permutation(std::move(w));
  }

  Permutation inversed() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(at(i) - 1)] = i;
    return Permutation(std::move(w));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  // Lexicographic order on one-line words.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.word_ < b.word_;
  }

 private:
  void validate() const {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> word_;
};

// The order-isomorphic permutation of a sequence of distinct integers:
// the i-th smallest entry becomes i.
inline Permutation reduce(const std::vector<int>& s) {
  std::vector<int> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("reduce: entries must be pairwise distinct");
  std::vector<int> w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    w[i] = static_cast<int>(
               std::lower_bound(sorted.begin(), sorted.end(), s[i]) -
               sorted.begin()) +
           1;
  }
  return Permutation(std::move(w));
}

// Accepted input notations:
//   - whitespace- or comma-separated letters: "15 17 16 9"
//   - compact digits for single-digit letters: "132"
//   - compact with parenthesized multi-digit letters: "(15)(17)(16)9"
inline Permutation parse_permutation(const std::string& text) {
  std::vector<int> w;
  const bool separated =
      text.find_first_of(" \t,") != std::string::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string::npos)
        throw std::invalid_argument("permutation literal: unbalanced '('");
      w.push_back(std::stoi(text.substr(i + 1, close - i - 1)));
      i = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (separated) {
        std::size_t j = i;
        while (j < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
        w.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
      } else {
        w.push_back(c - '0');  // compact notation: one digit, one letter
        ++i;
      }
    } else {
      throw std::invalid_argument(std::string("permutation literal: unexpected '") +
                                  c + "'");
    }
  }
  return Permutation(std::move(w));
}

// Space-separated one-line notation, e.g. "15 17 16 9".
inline std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p.at(i));
  }
  return out;
}

// Compact notation with multi-digit letters parenthesized, e.g. "(15)(17)9".
inline std::string format_permutation_compact(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    int v = p.at(i);
    if (v >= 10) {
      out += '(';
      out += std::to_string(v);
      out += ')';
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

// Calls fn(const Permutation&) for every permutation of {1..n} in
// lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("for_each_permutation: n < 0");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

// Same, restricted to permutations whose first letter is `first`
// (n >= 1; enumeration is lexicographic within the class).
template <typename Fn>
void for_each_permutation_with_first(int n, int first, Fn&& fn) {
  if (n < 1 || first < 1 || first > n)
    throw std::invalid_argument("for_each_permutation_with_first: bad arguments");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  w.push_back(first);
  for (int v = 1; v <= n; ++v)
    if (v != first) w.push_back(v);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

}  // namespace meshdist

#endif  // MESHDIST_PERMUTATION_HPP
