#include "meshdist/oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "meshdist/catalog.hpp"
#include "meshdist/ints.hpp"

namespace meshdist {
namespace {

TEST(BruteDistribution, ClassicalAscentIsCoinversionTable) {
  // tau=12 with no shading counts non-inversions; the row for n is the
  // Gaussian-binomial (Mahonian) row reversed onto k = 0..C(n,2).
  DistributionTable t = brute_distribution(catalog_lookup(1).pattern, 4);
  ASSERT_EQ(t.n_max(), 4);
  EXPECT_EQ(t.rows[0], (std::vector<Int>{1}));
  EXPECT_EQ(t.rows[1], (std::vector<Int>{1}));
  EXPECT_EQ(t.rows[2], (std::vector<Int>{1, 1}));
  EXPECT_EQ(t.rows[3], (std::vector<Int>{1, 2, 2, 1}));
  EXPECT_EQ(t.rows[4],
            (std::vector<Int>{1, 3, 5, 6, 5, 3, 1}));
  EXPECT_EQ(t.pattern_label, "tau=12;R=");
  EXPECT_FALSE(t.conjectural);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(t.row_sum(n), factorial(n)) << n;
}

TEST(BruteDistribution, CountAccessorPadsWithZero) {
  DistributionTable t = brute_distribution(catalog_lookup(1).pattern, 3);
  EXPECT_EQ(t.count(3, 0), Int(1));
  EXPECT_EQ(t.count(3, 3), Int(1));
  EXPECT_EQ(t.count(3, 4), Int(0));
  EXPECT_EQ(t.count(0, 5), Int(0));
}

TEST(BruteDistribution, ShardingDoesNotChangeTheResult) {
  const MeshPattern& p = catalog_lookup(48).pattern;
  OracleOptions one, three, seven;
  one.shard_count = 1;
  three.shard_count = 3;
  seven.shard_count = 7;  // more shards than first letters for small n
  DistributionTable a = brute_distribution(p, 5, one);
  DistributionTable b = brute_distribution(p, 5, three);
  DistributionTable c = brute_distribution(p, 5, seven);
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.rows, c.rows);
}

TEST(BruteDistribution, EnforcesTheCeilings) {
  const MeshPattern& p = catalog_lookup(1).pattern;
  EXPECT_THROW(brute_distribution(p, kOracleCeiling + 1), std::invalid_argument);
  OracleOptions unsafe;
  unsafe.allow_hard_ceiling = true;
  EXPECT_THROW(brute_distribution(p, kOracleHardCeiling + 1, unsafe),
               std::invalid_argument);
  EXPECT_THROW(brute_distribution(p, -1), std::invalid_argument);
}

TEST(AvoidersLex, StrongFixedPointFreePermutations) {
  const MeshPattern& sfp = strong_fixed_point_pattern();
  std::vector<Permutation> a3 = avoiders_lex(sfp, 3);
  std::vector<Permutation> expected{Permutation({2, 3, 1}), Permutation({3, 1, 2}),
                                    Permutation({3, 2, 1})};
  EXPECT_EQ(a3, expected);
  EXPECT_TRUE(std::is_sorted(a3.begin(), a3.end()));
  EXPECT_EQ(count_avoiders(sfp, 0), Int(1));
  EXPECT_EQ(count_avoiders(sfp, 1), Int(0));
  EXPECT_EQ(count_avoiders(sfp, 2), Int(1));
  EXPECT_EQ(count_avoiders(sfp, 3), Int(3));
  EXPECT_EQ(count_avoiders(sfp, 4), Int(14));
  EXPECT_EQ(count_avoiders(sfp, 5), Int(77));
}

TEST(AvoidersLex, MatchesTheDistributionHead) {
  for (int nr : {48, 49, 63}) {
    const MeshPattern& p = catalog_lookup(nr).pattern;
    DistributionTable t = brute_distribution(p, 5);
    for (int n = 0; n <= 5; ++n)
      EXPECT_EQ(Int(avoiders_lex(p, n).size()), t.count(n, 0)) << nr << " " << n;
  }
}

TEST(BruteJoint, PatternTimesDescents) {
  JointTable t = brute_joint(
      strong_fixed_point_pattern(),
      [](const Permutation& pi) { return pi.descents(); }, "sfp-by-descents", 3);
  EXPECT_EQ(t.label, "sfp-by-descents");
  ASSERT_EQ(t.n_max(), 3);
  // n = 3: the three fixed-point-free permutations 231, 312, 321 have
  // descent counts 1, 1, 2; 132 and 213 have one strong fixed point and one
  // descent each; 123 has three strong fixed points and no descent.
  ASSERT_EQ(t.counts[3].size(), 4u);
  EXPECT_EQ(t.counts[3][0], (std::vector<Int>{0, 2, 1}));
  EXPECT_EQ(t.counts[3][1], (std::vector<Int>{0, 2}));
  EXPECT_TRUE(t.counts[3][2].empty());
  EXPECT_EQ(t.counts[3][3], (std::vector<Int>{1}));
  // n = 0: the empty permutation.
  EXPECT_EQ(t.counts[0], (std::vector<std::vector<Int>>{{Int(1)}}));
}

TEST(Ints, SmallFactorialsAndBinomials) {
  EXPECT_EQ(factorial(0), Int(1));
  EXPECT_EQ(factorial(5), Int(120));
  EXPECT_EQ(factorial(20), Int("2432902008176640000"));
  EXPECT_EQ(binomial(5, 2), Int(10));
  EXPECT_EQ(binomial(5, 0), Int(1));
  EXPECT_EQ(binomial(5, 6), Int(0));
  EXPECT_EQ(binomial(0, 0), Int(1));
  EXPECT_EQ(to_int64(Int(42)), 42);
}

}  // namespace
}  // namespace meshdist
