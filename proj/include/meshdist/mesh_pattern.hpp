// Mesh patterns and their occurrences.
//
// A mesh pattern is a classical pattern tau of length k together with a set of
// shaded boxes R on the (k+1) x (k+1) grid drawn around tau's plot. Box (i, j)
// is the open rectangle between the i-th and (i+1)-st chosen positions and the
// j-th and (j+1)-st smallest chosen values (with 0 and n+1 as sentinels). A
// classical occurrence counts as a mesh occurrence iff every shaded box is free
// of host points.
#ifndef MESHDIST_MESH_PATTERN_HPP
#define MESHDIST_MESH_PATTERN_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meshdist/permutation.hpp"

namespace meshdist {

// A shaded box: col indexes the gap between consecutive chosen positions,
// row the gap between consecutive chosen values; both range over 0..k.
struct Box {
  int col = 0;
  int row = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class MeshPattern {
 public:
  MeshPattern() = default;

  MeshPattern(Permutation tau, std::vector<Box> shading)
      : tau_(std::move(tau)), shading_(std::move(shading)) {
    const int k = tau_.size();
    for (const Box& b : shading_) {
      if (b.col < 0 || b.col > k || b.row < 0 || b.row > k)
        throw std::invalid_argument("mesh pattern: box outside the grid");
    }
    std::sort(shading_.begin(), shading_.end());
    shading_.erase(std::unique(shading_.begin(), shading_.end()),
                   shading_.end());
  }

  const Permutation& tau() const { return tau_; }
  const std::vector<Box>& shading() const { return shading_; }  // sorted
  int length() const { return tau_.size(); }

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;

 private:
  Permutation tau_;
  std::vector<Box> shading_;
};

enum class SymmetryOp { kReverse, kComplement, kInverse };

// Grid symmetries act on the pattern letters and shading together:
// reverse maps box (i, j) to (k-i, j), complement to (i, k-j), and
// inverse to (j, i). Each is an involution.
inline MeshPattern transform(const MeshPattern& p, SymmetryOp op) {
  const int k = p.length();
  Permutation tau;
  std::vector<Box> shading;
  shading.reserve(p.shading().size());
  switch (op) {
    case SymmetryOp::kReverse:
      tau = p.tau().reversed();
      for (const Box& b : p.shading()) shading.push_back({k - b.col, b.row});
      break;
    case SymmetryOp::kComplement:
      tau = p.tau().complemented();
      for (const Box& b : p.shading()) shading.push_back({b.col, k - b.row});
      break;
    case SymmetryOp::kInverse:
      tau = p.tau().inversed();
      for (const Box& b : p.shading()) shading.push_back({b.row, b.col});
      break;
  }
  return MeshPattern(std::move(tau), std::move(shading));
}

// Pattern literal, bit-exact both ways: "tau=<word>;R=(i1,j1)(i2,j2)..."
// with the boxes sorted; R may be empty ("tau=12;R=").
inline std::string format_pattern(const MeshPattern& p) {
  std::string out = "tau=";
  for (int i = 1; i <= p.length(); ++i) out += std::to_string(p.tau().at(i));
  out += ";R=";
  for (const Box& b : p.shading()) {
    out += '(' + std::to_string(b.col) + ',' + std::to_string(b.row) + ')';
  }
  return out;
}

inline MeshPattern parse_pattern(const std::string& text) {
  const auto semi = text.find(';');
  if (text.rfind("tau=", 0) != 0 || semi == std::string::npos ||
      text.compare(semi + 1, 2, "R=") != 0) {
    throw std::invalid_argument(
        "pattern literal must look like tau=<word>;R=(i,j)...");
  }
  Permutation tau = parse_permutation(text.substr(4, semi - 4));
  std::vector<Box> shading;
  std::size_t i = semi + 3;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("pattern literal: expected '(' in R");
    std::size_t comma = text.find(',', i);
    std::size_t close = text.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("pattern literal: malformed box");
    shading.push_back({std::stoi(text.substr(i + 1, comma - i - 1)),
                       std::stoi(text.substr(comma + 1, close - comma - 1))});
    i = close + 1;
  }
  return MeshPattern(std::move(tau), std::move(shading));
}

// An occurrence is the strictly increasing tuple of host positions (1-based)
// whose letters realize tau and whose shaded boxes are empty.
struct Occurrence {
  std::vector<int> positions;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Dominance counts over the host's point set {(i, pi_i)}, for O(1) box
// emptiness queries. prefix_[i][v] = #{m <= i : pi_m <= v}.
class PointGrid {
 public:
  explicit PointGrid(const Permutation& pi) : n_(pi.size()) {
    prefix_.assign(static_cast<std::size_t>(n_ + 1),
                   std::vector<int>(static_cast<std::size_t>(n_ + 1), 0));
    for (int i = 1; i <= n_; ++i) {
      for (int v = 1; v <= n_; ++v) {
        prefix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
            prefix_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(v)] +
            (pi.at(i) <= v ? 1 : 0);
      }
    }
  }

  // Number of host points with position strictly inside (p_lo, p_hi) and
  // value strictly inside (v_lo, v_hi).
  int count_inside(int p_lo, int p_hi, int v_lo, int v_hi) const {
    if (p_hi - p_lo < 2 || v_hi - v_lo < 2) return 0;
    const auto& hi = prefix_[static_cast<std::size_t>(p_hi - 1)];
    const auto& lo = prefix_[static_cast<std::size_t>(p_lo)];
    return hi[static_cast<std::size_t>(v_hi - 1)] -
           hi[static_cast<std::size_t>(v_lo)] -
           lo[static_cast<std::size_t>(v_hi - 1)] +
           lo[static_cast<std::size_t>(v_lo)];
  }

 private:
  int n_;
  std::vector<std::vector<int>> prefix_;
};

namespace detail {

// Checks the mesh condition for the chosen positions (classical match assumed).
// sorted_values holds the chosen letters in increasing order.
inline bool shading_empty(const MeshPattern& p, const PointGrid& grid, int n,
                          const std::vector<int>& positions,
                          const std::vector<int>& sorted_values) {
  const int k = p.length();
  auto pos_bound = [&](int idx) {  // idx in 0..k -> sentinel-extended position
    if (idx == 0) return 0;
    if (idx == k + 1) return n + 1;
    return positions[static_cast<std::size_t>(idx - 1)];
  };
  auto val_bound = [&](int idx) {
    if (idx == 0) return 0;
    if (idx == k + 1) return n + 1;
    return sorted_values[static_cast<std::size_t>(idx - 1)];
  };
  for (const Box& b : p.shading()) {
    if (grid.count_inside(pos_bound(b.col), pos_bound(b.col + 1),
                          val_bound(b.row), val_bound(b.row + 1)) != 0)
      return false;
  }
  return true;
}

// Visits every occurrence in lexicographic order of the position tuple.
template <typename Fn>
void scan_occurrences(const MeshPattern& p, const Permutation& pi, Fn&& visit) {
  const int k = p.length();
  const int n = pi.size();
  if (k > n) return;
  const PointGrid grid(pi);
  std::vector<int> positions(static_cast<std::size_t>(k));
  std::vector<int> values(static_cast<std::size_t>(k));
  std::vector<int> sorted_values(static_cast<std::size_t>(k));
  const auto& tau = p.tau();

  // Depth-first over increasing position tuples; letters are checked for
  // order-isomorphism with tau as they are chosen, so subtrees die early.
  auto extend = [&](auto&& self, int depth, int start) -> void {
    if (depth == k) {
      sorted_values.assign(values.begin(), values.end());
      std::sort(sorted_values.begin(), sorted_values.end());
      if (shading_empty(p, grid, n, positions, sorted_values))
        visit(positions);
      return;
    }
    for (int pos = start; pos <= n - (k - depth - 1); ++pos) {
      const int v = pi.at(pos);
      bool consistent = true;
      for (int a = 0; a < depth; ++a) {
        if ((tau.at(a + 1) < tau.at(depth + 1)) != (values[static_cast<std::size_t>(a)] < v)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      positions[static_cast<std::size_t>(depth)] = pos;
      values[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1, pos + 1);
    }
  };
  extend(extend, 0, 1);
}

}  // namespace detail

// All occurrences of p in pi, ordered lexicographically by position tuple.
inline std::vector<Occurrence> find_occurrences(const MeshPattern& p,
                                                const Permutation& pi) {
  std::vector<Occurrence> out;
  detail::scan_occurrences(p, pi,
                           [&](const std::vector<int>& pos) { out.push_back({pos}); });
  return out;
}

inline long count_occurrences(const MeshPattern& p, const Permutation& pi) {
  long count = 0;
  detail::scan_occurrences(p, pi, [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace meshdist

#endif  // MESHDIST_MESH_PATTERN_HPP
