#include "meshdist/permutation.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace meshdist {
namespace {

TEST(Permutation, BasicAccessors) {
  Permutation p({1, 3, 2});
  EXPECT_EQ(p.size(), 3);
  EXPECT_FALSE(p.empty());
  EXPECT_EQ(p.at(1), 1);
  EXPECT_EQ(p.at(2), 3);
  EXPECT_EQ(p.at(3), 2);
  EXPECT_EQ(p.position_of(3), 2);
  EXPECT_EQ(p.word(), (std::vector<int>{1, 3, 2}));
  EXPECT_TRUE(Permutation().empty());
  EXPECT_EQ(Permutation::identity(4), Permutation({1, 2, 3, 4}));
}

TEST(Permutation, ValidatesWord) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
}

TEST(Permutation, Descents) {
  EXPECT_EQ(Permutation({1, 3, 2}).descents(), 1);
  EXPECT_EQ(Permutation({3, 2, 1}).descents(), 2);
  EXPECT_EQ(Permutation::identity(5).descents(), 0);
  EXPECT_EQ(Permutation().descents(), 0);
}

TEST(Permutation, SymmetryMaps) {
  Permutation p({1, 3, 2});
  EXPECT_EQ(p.reversed(), Permutation({2, 3, 1}));
  EXPECT_EQ(p.complemented(), Permutation({3, 1, 2}));
  EXPECT_EQ(p.inversed(), Permutation({1, 3, 2}));
  EXPECT_EQ(Permutation({2, 3, 1}).inversed(), Permutation({3, 1, 2}));
  // Each map is an involution.
  EXPECT_EQ(p.reversed().reversed(), p);
  EXPECT_EQ(p.complemented().complemented(), p);
  EXPECT_EQ(p.inversed().inversed(), p);
}

TEST(Permutation, LexComparison) {
  EXPECT_LT(Permutation({1, 2, 3}), Permutation({1, 3, 2}));
  EXPECT_LT(Permutation({2, 1, 3}), Permutation({2, 3, 1}));
}

TEST(Reduce, OrderIsomorphicCopy) {
  EXPECT_EQ(reduce({4, 7, 2}), Permutation({2, 3, 1}));
  EXPECT_EQ(reduce({15, 17, 16}), Permutation({1, 3, 2}));
  EXPECT_EQ(reduce({}), Permutation());
  EXPECT_THROW(reduce({3, 3}), std::invalid_argument);
}

TEST(ParsePermutation, AcceptsAllNotations) {
  Permutation expected({1, 3, 2});
  EXPECT_EQ(parse_permutation("132"), expected);
  EXPECT_EQ(parse_permutation("1 3 2"), expected);
  EXPECT_EQ(parse_permutation("1,3,2"), expected);
  EXPECT_EQ(parse_permutation("(15)(17)(16)9(10)6(12)8(13)(11)(14)745321").size(),
            17);
  EXPECT_EQ(parse_permutation("15 17 16 9 10 6 12 8 13 11 14 7 4 5 3 2 1"),
            parse_permutation("(15)(17)(16)9(10)6(12)8(13)(11)(14)745321"));
  EXPECT_EQ(parse_permutation(""), Permutation());
}

TEST(ParsePermutation, RejectsBadInput) {
  EXPECT_THROW(parse_permutation("122"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1x2"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("(15"), std::invalid_argument);
}

TEST(FormatPermutation, RoundTrips) {
  Permutation p = parse_permutation("(15)(17)(16)9(10)6(12)8(13)(11)(14)745321");
  EXPECT_EQ(format_permutation(p), "15 17 16 9 10 6 12 8 13 11 14 7 4 5 3 2 1");
  EXPECT_EQ(format_permutation_compact(p),
            "(15)(17)(16)9(10)6(12)8(13)(11)(14)745321");
  EXPECT_EQ(parse_permutation(format_permutation(p)), p);
  EXPECT_EQ(parse_permutation(format_permutation_compact(p)), p);
  EXPECT_EQ(format_permutation_compact(Permutation({2, 3, 1})), "231");
}

TEST(ForEachPermutation, LexOrderAndCount) {
  std::vector<Permutation> seen;
  for_each_permutation(3, [&](const Permutation& p) { seen.push_back(p); });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen.front(), Permutation({1, 2, 3}));
  EXPECT_EQ(seen[1], Permutation({1, 3, 2}));
  EXPECT_EQ(seen.back(), Permutation({3, 2, 1}));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));

  int empties = 0;
  for_each_permutation(0, [&](const Permutation& p) {
    EXPECT_TRUE(p.empty());
    ++empties;
  });
  EXPECT_EQ(empties, 1);
}

TEST(ForEachPermutationWithFirst, RestrictsFirstLetter) {
  std::vector<Permutation> seen;
  for_each_permutation_with_first(
      3, 2, [&](const Permutation& p) { seen.push_back(p); });
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen[0], Permutation({2, 1, 3}));
  EXPECT_EQ(seen[1], Permutation({2, 3, 1}));

  // The classes over all first letters partition S_n.
  long total = 0;
  for (int first = 1; first <= 4; ++first)
    for_each_permutation_with_first(4, first,
                                    [&](const Permutation&) { ++total; });
  EXPECT_EQ(total, 24);
}

}  // namespace
}  // namespace meshdist
