// The built-in catalog of length-2 mesh patterns whose occurrence statistics
// this library can enumerate, keyed by their conventional numbering, plus the
// length-1 strong-fixed-point pattern.
//
// Status meaning:
//   kProvedDistribution   - a closed form / recurrence for the full
//                           distribution is implemented in formulas.hpp
//   kConjectured          - a conjectured closed form is implemented and
//                           flagged as such in all outputs
//   kEquidistributionOnly - no enumeration is known; the pattern participates
//                           in (proved or conjectured) equidistribution groups
#ifndef MESHDIST_CATALOG_HPP
#define MESHDIST_CATALOG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "meshdist/mesh_pattern.hpp"

namespace meshdist {

enum class PatternStatus { kProvedDistribution, kConjectured, kEquidistributionOnly };

inline std::string to_string(PatternStatus s) {
  switch (s) {
    case PatternStatus::kProvedDistribution: return "proved-distribution";
    case PatternStatus::kConjectured: return "conjectured";
    case PatternStatus::kEquidistributionOnly: return "equidistribution-only";
  }
  throw std::logic_error("unreachable");
}

struct CatalogEntry {
  int nr = 0;
  MeshPattern pattern;
  PatternStatus status = PatternStatus::kProvedDistribution;
};

// A strong fixed point is an element with everything smaller to its left and
// everything larger to its right: the length-1 pattern shading the quadrants
// above-left and below-right of the point.
inline const MeshPattern& strong_fixed_point_pattern() {
  static const MeshPattern p(Permutation({1}), {{0, 1}, {1, 0}});
  return p;
}

inline const std::vector<CatalogEntry>& catalog() {
  using S = PatternStatus;
  static const Permutation kAscent({1, 2});
  static const std::vector<CatalogEntry> entries = {
      {1, MeshPattern(kAscent, {}), S::kProvedDistribution},
      {3, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 2}}), S::kConjectured},
      {5, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}}), S::kProvedDistribution},
      {8, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), S::kProvedDistribution},
      {9, MeshPattern(kAscent, {{0, 1}, {1, 1}, {1, 2}, {2, 1}}), S::kProvedDistribution},
      {10, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 1}, {2, 2}}),
       S::kProvedDistribution},
      {11, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2},
                                 {2, 0}, {2, 1}, {2, 2}}),
       S::kProvedDistribution},
      {12, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}}),
       S::kProvedDistribution},
      {13, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0},
                                 {2, 1}, {2, 2}}),
       S::kProvedDistribution},
      {14, MeshPattern(kAscent, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}}),
       S::kProvedDistribution},
      {15, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}),
       S::kProvedDistribution},
      {16, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 0}, {2, 0}}),
       S::kProvedDistribution},
      {17, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0},
                                 {2, 1}}),
       S::kProvedDistribution},
      {18, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 2}}),
       S::kProvedDistribution},
      {19, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 2}}),
       S::kProvedDistribution},
      {20, MeshPattern(kAscent, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 0},
                                 {2, 1}}),
       S::kProvedDistribution},
      {21, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 2}}),
       S::kProvedDistribution},
      {22, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {2, 2}}),
       S::kProvedDistribution},
      {23, MeshPattern(kAscent, {{0, 0}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}),
       S::kEquidistributionOnly},
      {24, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}}),
       S::kEquidistributionOnly},
      {27, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 2}}),
       S::kProvedDistribution},
      {28, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}}),
       S::kProvedDistribution},
      {30, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0},
                                 {2, 1}}),
       S::kProvedDistribution},
      {33, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}),
       S::kProvedDistribution},
      {34, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1},
                                 {2, 2}}),
       S::kProvedDistribution},
      {36, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}}),
       S::kProvedDistribution},
      {45, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 1}}),
       S::kProvedDistribution},
      {48, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 2}, {2, 1}, {2, 2}}),
       S::kEquidistributionOnly},
      {49, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}}),
       S::kEquidistributionOnly},
      {50, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}),
       S::kEquidistributionOnly},
      {53, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 2}, {2, 1}}),
       S::kEquidistributionOnly},
      {54, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 1}, {2, 2}}),
       S::kEquidistributionOnly},
      {55, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}),
       S::kProvedDistribution},
      {56, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}),
       S::kProvedDistribution},
      {57, MeshPattern(kAscent, {{0, 1}, {1, 1}, {1, 2}, {2, 0}}),
       S::kEquidistributionOnly},
      {58, MeshPattern(kAscent, {{0, 1}, {1, 0}, {1, 1}, {2, 2}}),
       S::kEquidistributionOnly},
      {61, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 2}, {2, 0}}),
       S::kEquidistributionOnly},
      {62, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 0}, {2, 2}}),
       S::kEquidistributionOnly},
      {63, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 1}}),
       S::kProvedDistribution},
      {64, MeshPattern(kAscent, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 0}}),
       S::kProvedDistribution},
      {65, MeshPattern(kAscent, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}),
       S::kProvedDistribution},
  };
  return entries;
}

inline const CatalogEntry& catalog_lookup(int nr) {
  for (const CatalogEntry& e : catalog())
    if (e.nr == nr) return e;
  throw std::invalid_argument("no catalogued pattern with nr=" + std::to_string(nr));
}

inline bool catalog_has(int nr) {
  for (const CatalogEntry& e : catalog())
    if (e.nr == nr) return true;
  return false;
}

}  // namespace meshdist

#endif  // MESHDIST_CATALOG_HPP
