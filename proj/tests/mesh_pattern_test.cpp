#include "meshdist/mesh_pattern.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace meshdist {
namespace {

MeshPattern pattern(const std::string& literal) { return parse_pattern(literal); }

TEST(MeshPattern, NormalizesShading) {
  MeshPattern p(Permutation({1, 2}), {{2, 1}, {0, 0}, {2, 1}});
  EXPECT_EQ(p.shading(), (std::vector<Box>{{0, 0}, {2, 1}}));
  EXPECT_THROW(MeshPattern(Permutation({1, 2}), {{3, 0}}), std::invalid_argument);
  EXPECT_THROW(MeshPattern(Permutation({1, 2}), {{0, -1}}), std::invalid_argument);
}

TEST(MeshPattern, LiteralRoundTrip) {
  const std::string literal = "tau=12;R=(0,0)(0,1)(1,2)(2,1)(2,2)";
  MeshPattern p = pattern(literal);
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.tau(), Permutation({1, 2}));
  EXPECT_EQ(format_pattern(p), literal);

  MeshPattern bare = pattern("tau=12;R=");
  EXPECT_TRUE(bare.shading().empty());
  EXPECT_EQ(format_pattern(bare), "tau=12;R=");

  // Boxes are emitted sorted regardless of input order.
  EXPECT_EQ(format_pattern(pattern("tau=12;R=(2,2)(0,0)")), "tau=12;R=(0,0)(2,2)");

  EXPECT_THROW(pattern("tau=12"), std::invalid_argument);
  EXPECT_THROW(pattern("tau=12;R=(1)"), std::invalid_argument);
  EXPECT_THROW(pattern("R=(0,0);tau=12"), std::invalid_argument);
}

TEST(MeshPattern, GridSymmetries) {
  MeshPattern p = pattern("tau=12;R=(0,0)(0,1)(1,2)(2,1)(2,2)");
  EXPECT_EQ(format_pattern(transform(p, SymmetryOp::kReverse)),
            "tau=21;R=(0,1)(0,2)(1,2)(2,0)(2,1)");
  EXPECT_EQ(format_pattern(transform(p, SymmetryOp::kComplement)),
            "tau=21;R=(0,1)(0,2)(1,0)(2,0)(2,1)");
  EXPECT_EQ(format_pattern(transform(p, SymmetryOp::kInverse)),
            "tau=12;R=(0,0)(1,0)(1,2)(2,1)(2,2)");
  for (SymmetryOp op : {SymmetryOp::kReverse, SymmetryOp::kComplement,
                        SymmetryOp::kInverse}) {
    EXPECT_EQ(transform(transform(p, op), op), p);
  }
}

TEST(PointGrid, CountsOpenBoxes) {
  PointGrid grid(Permutation({2, 4, 1, 3}));
  // Whole square, exclusive sentinels: all four points.
  EXPECT_EQ(grid.count_inside(0, 5, 0, 5), 4);
  // Strictly between positions 1 and 4 and values 1 and 4: points (2,4)? no,
  // value 4 excluded; (3,1)? value excluded. Only position 2/3 with value 2..3:
  // pi_2=4 out, pi_3=1 out.
  EXPECT_EQ(grid.count_inside(1, 4, 1, 4), 0);
  EXPECT_EQ(grid.count_inside(1, 4, 0, 5), 2);
  // Degenerate gaps contain nothing.
  EXPECT_EQ(grid.count_inside(2, 3, 0, 5), 0);
  EXPECT_EQ(grid.count_inside(0, 5, 3, 4), 0);
}

TEST(Occurrences, ClassicalPatternIgnoresShading) {
  MeshPattern ascent = pattern("tau=12;R=");
  auto occ = find_occurrences(ascent, Permutation({2, 4, 1, 3}));
  std::vector<Occurrence> expected{{{1, 2}}, {{1, 4}}, {{3, 4}}};
  EXPECT_EQ(occ, expected);
  EXPECT_EQ(count_occurrences(ascent, Permutation({2, 4, 1, 3})), 3);
  EXPECT_EQ(count_occurrences(ascent, Permutation({2, 1})), 0);
  EXPECT_EQ(count_occurrences(ascent, Permutation()), 0);
}

TEST(Occurrences, ShadingFiltersClassicalMatches) {
  // Fully shaded single point: an occurrence forbids every other host point.
  MeshPattern lonely(Permutation({1}), {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_EQ(count_occurrences(lonely, Permutation({1})), 1);
  EXPECT_EQ(count_occurrences(lonely, Permutation({1, 2})), 0);

  // Strong fixed points: nothing above-left, nothing below-right.
  MeshPattern sfp(Permutation({1}), {{0, 1}, {1, 0}});
  EXPECT_EQ(count_occurrences(sfp, Permutation({1, 3, 2})), 1);
  EXPECT_EQ(count_occurrences(sfp, Permutation::identity(5)), 5);
  EXPECT_EQ(count_occurrences(sfp, Permutation({2, 1})), 0);
  auto occ = find_occurrences(sfp, Permutation({1, 2, 4, 3}));
  std::vector<Occurrence> expected{{{1}}, {{2}}};
  EXPECT_EQ(occ, expected);
}

TEST(Occurrences, SentinelBoxesReachTheBoundary) {
  // tau=12 with the lower-left corner shaded: no host point may sit
  // below-left of the occurrence.
  MeshPattern corner = pattern("tau=12;R=(0,0)");
  // In 312 the pair (1,3)->(3,?) no: pairs are positions (2,3) letters 1,2.
  // Nothing precedes position 2 with value < 1, so it counts.
  EXPECT_EQ(count_occurrences(corner, Permutation({3, 1, 2})), 1);
  // In 132 the pair at positions (1,2) has empty corner; (1,3) too; so 2.
  EXPECT_EQ(count_occurrences(corner, Permutation({1, 3, 2})), 2);
}

TEST(Occurrences, TwoByTwoExamples) {
  // The two shaded ascent patterns used throughout: their length-2 and
  // length-3 avoidance sets.
  MeshPattern a = pattern("tau=12;R=(0,0)(0,1)(1,2)(2,1)(2,2)");
  MeshPattern b = pattern("tau=12;R=(0,0)(0,1)(1,1)(1,2)(2,0)");
  EXPECT_EQ(count_occurrences(a, Permutation({1, 2})), 1);
  EXPECT_EQ(count_occurrences(b, Permutation({1, 2})), 1);
  EXPECT_EQ(count_occurrences(a, Permutation({2, 1})), 0);
  EXPECT_EQ(count_occurrences(b, Permutation({2, 1})), 0);

  std::vector<Permutation> avoiders_a, avoiders_b;
  for_each_permutation(3, [&](const Permutation& p) {
    if (count_occurrences(a, p) == 0) avoiders_a.push_back(p);
    if (count_occurrences(b, p) == 0) avoiders_b.push_back(p);
  });
  EXPECT_EQ(avoiders_a,
            (std::vector<Permutation>{Permutation({1, 3, 2}), Permutation({3, 2, 1})}));
  EXPECT_EQ(avoiders_b,
            (std::vector<Permutation>{Permutation({2, 3, 1}), Permutation({3, 2, 1})}));
}

}  // namespace
}  // namespace meshdist
