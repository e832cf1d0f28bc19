#include <gtest/gtest.h>

#include <algorithm>

#include "helly/error.hpp"
#include "helly/hsystem.hpp"
#include "helly/properties.hpp"
#include "test_support.hpp"

namespace helly {
namespace {

Box box1(long long lo, long long hi) { return Box{{Rational(lo)}, {Rational(hi)}}; }

TEST(HSystem, CanonicalBoxSystem) {
  auto s1 = canonical_box_system(1);
  ASSERT_EQ(s1->size(), 2u);
  EXPECT_EQ(s1->normal(0), Vector{Rational(1)});
  EXPECT_EQ(s1->normal(1), Vector{Rational(-1)});
  auto s2 = canonical_box_system(2);
  EXPECT_EQ(s2->normal(2), (Vector{Rational(0), Rational(1)}));
  EXPECT_EQ(s2->normal(3), (Vector{Rational(0), Rational(-1)}));
  EXPECT_EQ(canonical_box_system(3)->size(), 6u);
  EXPECT_TRUE(s2->is_box_system());
  EXPECT_THROW(make_system(2, {{Rational(0), Rational(0)}}), Error);
}

TEST(HSystem, BoxConversions) {
  auto s = canonical_box_system(2);
  HSet sq = box_to_hset(Box{{Rational(0), Rational(0)}, {Rational(2), Rational(2)}}, s);
  EXPECT_EQ(sq.offsets(), (Vector{Rational(2), Rational(0), Rational(2), Rational(0)}));
  HSet h(canonical_box_system(1), {Rational(3), Rational(-1)});
  EXPECT_EQ(hset_to_box(h), box1(1, 3));
  HSet general(make_system(1, {{Rational(2)}}), {Rational(1)});
  EXPECT_THROW(hset_to_box(general), Error);
  try {
    hset_to_box(general);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not a box system");
  }
}

TEST(HSystem, BoxRoundTripProperty) {
  testing::Dice dice(3);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t d = static_cast<std::size_t>(dice.between(1, 4));
    Box b = testing::random_box(dice, d, 50, dice.between(1, 7));
    EXPECT_EQ(hset_to_box(box_to_hset(b)), b);
  }
}

TEST(HSystem, IntersectExamples) {
  auto s = canonical_box_system(2);
  HSet a = box_to_hset(Box{{Rational(0), Rational(0)}, {Rational(2), Rational(2)}}, s);
  HSet b = box_to_hset(Box{{Rational(1), Rational(1)}, {Rational(3), Rational(3)}}, s);
  EXPECT_EQ(hset_to_box(intersect(a, b)), (Box{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}));
  std::vector<HSet> one{a};
  EXPECT_EQ(intersect(std::span<const HSet>(one)), a);
  std::vector<HSet> none;
  EXPECT_THROW(intersect(std::span<const HSet>(none)), Error);
  HSet other(canonical_box_system(1), {Rational(1), Rational(0)});
  EXPECT_THROW(intersect(a, other), Error);
}

TEST(HSystem, IntersectMatchesIntervalOracle) {
  testing::Dice dice(5);
  for (int t = 0; t < 300; ++t) {
    std::vector<Box> boxes;
    std::vector<HSet> sets;
    auto s = canonical_box_system(3);
    for (int i = 0; i < 5; ++i) {
      boxes.push_back(testing::random_box(dice, 3, 30));
      sets.push_back(box_to_hset(boxes.back(), s));
    }
    EXPECT_EQ(hset_to_box(intersect(std::span<const HSet>(sets))), testing::interval_meet(boxes));
  }
}

TEST(HSystem, IntersectIsOrderFree) {
  testing::Dice dice(8);
  for (int t = 0; t < 40; ++t) {
    Family f = testing::random_hsets(dice, testing::random_system(dice, 2, 4), 5);
    std::vector<HSet> sets = f.members();
    const HSet expected = intersect(f);
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    do {
      std::vector<HSet> shuffled;
      for (auto p : perm) shuffled.push_back(sets[p]);
      ASSERT_EQ(intersect(std::span<const HSet>(shuffled)), expected);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(intersect(expected, expected), expected);
    for (const HSet& m : sets) EXPECT_TRUE(offset_leq(expected, m));
  }
}

TEST(HSystem, CompareAndOffsetOrder) {
  auto s = canonical_box_system(1);
  HSet a = box_to_hset(box1(0, 1), s), b = box_to_hset(box1(0, 2), s);
  EXPECT_EQ(compare(a, a, 0), std::strong_ordering::equal);
  EXPECT_EQ(compare(a, b, 0), std::strong_ordering::less);
  EXPECT_EQ(compare(b, a, 0), std::strong_ordering::greater);
  EXPECT_THROW(compare(a, b, 2), std::exception);
  EXPECT_TRUE(offset_leq(a, a));
  EXPECT_TRUE(offset_leq(a, b));
  EXPECT_FALSE(offset_leq(b, a));
}

TEST(HSystem, CompareAgreesWithHalfspaceContainment) {
  // H_i(a) escapes H_i(b) iff {<n, x> <= a_i, <n, x> >= b_i + delta} is feasible; offsets
  // have denominators at most 3, so delta = 1/1000 separates distinct values.
  testing::Dice dice(9);
  for (int t = 0; t < 200; ++t) {
    auto sys = testing::random_system(dice, 2, 3);
    Family f = testing::random_hsets(dice, sys, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      Vector neg = sys->normal(i);
      for (auto& c : neg) c = -c;
      auto pair = make_system(2, {sys->normal(i), neg});
      Vector offsets{f.member(0).offset(i), -(f.member(1).offset(i) + Rational(1, 1000))};
      std::vector<std::size_t> order{1, 0};
      const bool escapes = fourier_motzkin_feasible(*pair, offsets, order);
      EXPECT_EQ(compare(f.member(0), f.member(1), i) != std::strong_ordering::greater, !escapes);
    }
  }
}

TEST(HSystem, OffsetLeqDetectsPerturbation) {
  testing::Dice dice(10);
  for (int t = 0; t < 200; ++t) {
    Family f = testing::random_hsets(dice, testing::random_system(dice, 2, 4), 1);
    Vector up = f.member(0).offsets();
    up[static_cast<std::size_t>(dice.between(0, 3))] += Rational(1, 2);
    EXPECT_FALSE(offset_leq(HSet(f.system(), up), f.member(0)));
    EXPECT_TRUE(offset_leq(f.member(0), HSet(f.system(), up)));
  }
}

TEST(HSystem, FamilyIds) {
  auto s = canonical_box_system(1);
  Family f(s);
  f.add("a", box_to_hset(box1(0, 1), s));
  f.add("b", box_to_hset(box1(2, 3), s));
  EXPECT_THROW(f.add("a", box_to_hset(box1(0, 1), s)), Error);
  EXPECT_EQ(f.index_of("b"), 1u);
  EXPECT_THROW(f.index_of("zz"), Error);
  std::vector<std::string> ids{"b"};
  EXPECT_EQ(f.subfamily_by_ids(ids).ids(), ids);
  EXPECT_THROW(f.add("c", HSet(canonical_box_system(2), Vector(4, Rational(1)))), Error);
}

TEST(HSystem, SortedByOrderingBreaksTiesByPosition) {
  auto s = canonical_box_system(1);
  Family f(s);
  f.add("a", box_to_hset(box1(0, 2), s));
  f.add("b", box_to_hset(box1(0, 1), s));
  f.add("c", box_to_hset(box1(0, 2), s));
  EXPECT_EQ(sorted_by_ordering(f, 0), (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(sorted_by_ordering(f, 1), (std::vector<std::size_t>{0, 1, 2}));
}

}  // namespace
}  // namespace helly
