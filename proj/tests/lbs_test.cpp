#include <set>

#include <gtest/gtest.h>

#include "activity/errors.hpp"
#include "activity/gain_graph.hpp"
#include "activity/lbs.hpp"
#include "activity/nbc.hpp"

using namespace activity;

namespace {

std::vector<int> slots(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [v, c] : pairs) out[static_cast<std::size_t>(v)] = c;
  return out;
}

LbsTree reference_tree() {
  return LbsTree(10, 7, slots(10, {{7, 2}, {9, 1}, {5, 4}, {4, 3}}),
                 slots(10, {{2, 5}, {5, 9}, {1, 8}, {4, 6}, {6, 10}}));
}

const ForestClass kNonIncreasing{ForestMode::kNonIncreasing, 1, 0};

}  // namespace

TEST(Lbs, Construction) {
  const LbsTree t = reference_tree();
  EXPECT_TRUE(t.is_left_variant());
  EXPECT_EQ(t.parent(8), 1);
  EXPECT_EQ(t.parent(7), 0);
  EXPECT_EQ(t.edges().size(), 9u);
  EXPECT_EQ(t.edges().front(), (ForestEdge{9, 1, 1}));
  EXPECT_THROW(LbsTree(3, 2, slots(3, {{2, 3}}), slots(3, {})), DomainError);
  EXPECT_THROW(LbsTree(3, 2, slots(3, {{2, 1}}), slots(3, {})), DomainError);
  EXPECT_THROW(LbsTree(3, 3, slots(3, {{3, 2}}), slots(3, {{2, 3}})), DomainError);
  EXPECT_THROW(LbsTree(3, 3, slots(3, {{3, 2}, {2, 1}}), slots(3, {{1, 2}})), DomainError);
}

TEST(Lbs, Counts) {
  EXPECT_EQ(enumerate_lbs(1, false).size(), 1u);
  EXPECT_EQ(enumerate_lbs(2, false).size(), 2u);
  EXPECT_EQ(enumerate_lbs(3, false).size(), 7u);
  EXPECT_EQ(enumerate_lbs(4, false).size(), 36u);
  EXPECT_EQ(enumerate_lbs(3, true).size(), 3u);
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_lbs(n, false);
    const auto left = enumerate_lbs(n, true);
    std::size_t left_in_all = 0;
    for (const auto& t : all) left_in_all += t.is_left_variant() ? 1 : 0;
    EXPECT_EQ(left_in_all, left.size());
    EXPECT_EQ(left.size(), count_forests(n, 1, kNonIncreasing, true));
    if (n <= 5) EXPECT_EQ(all.size(), region_counts(complete_interval(n, 1, 1)).regions);
  }
}

TEST(Lbs, ReferenceRotation) {
  const ColoredForest r = rotate_to_nonincreasing(reference_tree());
  EXPECT_TRUE(r.is_tree());
  EXPECT_EQ(r.roots(), (std::vector<int>{7}));
  const std::vector<std::pair<int, int>> parents{{5, 7}, {9, 7}, {8, 9}, {6, 5}, {10, 5},
                                                 {2, 7}, {1, 9}, {4, 5}, {3, 4}};
  for (const auto& [child, parent] : parents) EXPECT_EQ(r.parent(child), parent) << child;
  EXPECT_TRUE(classify(r, kNonIncreasing));
}

TEST(Lbs, RotationIsBijection) {
  for (int n = 1; n <= 7; ++n) {
    std::set<ColoredForest> images;
    for (const auto& t : enumerate_lbs(n, true)) {
      const ColoredForest r = rotate_to_nonincreasing(t);
      EXPECT_TRUE(classify(r, kNonIncreasing));
      images.insert(r);
    }
    EXPECT_EQ(images.size(), count_forests(n, 1, kNonIncreasing, true));
  }
  EXPECT_THROW(rotate_to_nonincreasing(LbsTree(2, 1, slots(2, {}), slots(2, {{1, 2}}))), DomainError);
}

TEST(Conjecture, SmallCases) {
  const auto one = conjecture_report(1, ConjectureVariant::kLiteralLbs);
  EXPECT_EQ(one.dist_consecutive, (ActivityVector{1}));
  EXPECT_TRUE(one.equal);
  const auto lit = conjecture_report(3, ConjectureVariant::kLiteralLbs);
  EXPECT_EQ(lit.dist_consecutive, (ActivityVector{1, 1, 1}));
  EXPECT_EQ(lit.dist_top, (ActivityVector{1, 2, 0}));
  EXPECT_FALSE(lit.equal);
  const auto res = conjecture_report(3, ConjectureVariant::kRestrictedNonIncreasing);
  EXPECT_EQ(res.dist_consecutive, (ActivityVector{1, 1, 1}));
  EXPECT_EQ(res.dist_top, (ActivityVector{1, 1, 1}));
  EXPECT_TRUE(res.equal);
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(conjecture_report(n, ConjectureVariant::kRestrictedNonIncreasing).equal);
  EXPECT_EQ(parse_conjecture_variant("restricted"), ConjectureVariant::kRestrictedNonIncreasing);
  EXPECT_THROW(parse_conjecture_variant("lbs"), DomainError);
  EXPECT_THROW(conjecture_report(0, ConjectureVariant::kLiteralLbs), DomainError);
}
