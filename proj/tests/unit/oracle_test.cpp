#include <gtest/gtest.h>

#include "helly/constructions.hpp"
#include "helly/error.hpp"
#include "helly/oracle.hpp"
#include "helly/selection.hpp"
#include "test_support.hpp"

namespace helly {
namespace {

using testing::Dice;

const MonotoneProperty kNonEmpty = MonotoneProperty::non_empty();

Family intervals(std::vector<std::pair<long long, long long>> spans) {
  auto system = canonical_box_system(1);
  Family f(system);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    f.add("i" + std::to_string(i), box_to_hset(Box{{Rational(spans[i].first)}, {Rational(spans[i].second)}}, system));
  }
  return f;
}

std::vector<Family> singletons(const Family& f) {
  std::vector<Family> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.subfamily(std::vector<std::size_t>{i}));
  return out;
}

TEST(BruteMinWitness, Examples) {
  EXPECT_EQ(brute_min_witness(intervals({{0, 1}})), std::vector<std::string>{"i0"});
  auto w = brute_min_witness(intervals({{0, 5}, {1, 4}, {2, 6}}));
  EXPECT_EQ(w, (std::vector<std::string>{"i1", "i2"}));
  EXPECT_THROW(brute_min_witness(Family(canonical_box_system(1))), Error);
  Limits tight = Limits::parse("brute_family=2");
  EXPECT_THROW(brute_min_witness(intervals({{0, 5}, {1, 4}, {2, 6}}), tight), LimitError);
}

TEST(BruteMinWitness, NeverSmallerThanNeededAndNeverLarger) {
  Dice dice(51);
  for (int t = 0; t < 150; ++t) {
    const std::size_t d = static_cast<std::size_t>(dice.between(1, 3));
    Family f = testing::random_boxes(dice, d, 10, 8);
    auto brute = brute_min_witness(f);
    auto fast = strong_helly_witness(f);
    EXPECT_LE(brute.size(), 2 * d);
    EXPECT_LE(brute.size(), fast.ids.size());
    EXPECT_EQ(intersect(f.subfamily_by_ids(brute)), intersect(f));
  }
}

TEST(MonotoneHelly, Corollary) {
  Dice dice(52);
  int hypotheses = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = static_cast<std::size_t>(dice.between(1, 2));
    Family f = testing::random_boxes(dice, d, static_cast<std::size_t>(dice.between(2 * d + 1, 6)), 8);
    const MonotoneProperty p = dice.coin() ? kNonEmpty : MonotoneProperty::volume_at_least(Rational(1));
    auto r = verify_monotone_helly(f, p);
    if (r.hypothesis) {
      ++hypotheses;
      EXPECT_TRUE(r.conclusion);
    }
  }
  EXPECT_GT(hypotheses, 20);
  // Below 2d the implication fails on the tight construction.
  Family tight = gen_tight_colorful(2, Rational(1, 2));
  auto r = verify_monotone_helly(tight, MonotoneProperty::volume_at_least(Rational(1)), 3);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_FALSE(r.conclusion);
}

TEST(BruteColorful, Examples) {
  Family shared = intervals({{0, 2}});
  auto r = brute_colorful(ColorClasses({shared, shared}), kNonEmpty);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.conclusion);
  EXPECT_EQ(r.intersecting_class, 0u);

  Family tight = gen_tight_colorful(2, Rational(1, 2));
  auto vol = MonotoneProperty::volume_at_least(Rational(1));
  auto all = brute_colorful(ColorClasses(singletons(tight)), vol);
  EXPECT_FALSE(all.hypothesis);
  EXPECT_EQ(all.failing_transversal, tight.ids());
  auto three = singletons(tight);
  three.pop_back();
  auto fewer = brute_colorful(ColorClasses(three), vol);
  EXPECT_TRUE(fewer.hypothesis);
}

TEST(BruteColorful, HypothesisImpliesConclusion) {
  Dice dice(53);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = static_cast<std::size_t>(dice.between(1, 2));
    auto system = canonical_box_system(d);
    std::vector<Family> classes;
    for (std::size_t c = 0; c < 2 * d; ++c) {
      Family f(system);
      for (long long i = 0; i < dice.between(1, 3); ++i) {
        f.add("c" + std::to_string(c) + "_" + std::to_string(i), box_to_hset(testing::random_box(dice, d, 6), system));
      }
      classes.push_back(f);
    }
    auto r = brute_colorful(ColorClasses(classes), kNonEmpty);
    if (r.hypothesis) EXPECT_TRUE(r.conclusion);
  }
}

TEST(BruteBestSubfamily, Examples) {
  Family same = intervals({{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(brute_best_subfamily(same, kNonEmpty).size(), 3u);
  EXPECT_EQ(brute_best_subfamily(intervals({{0, 1}, {2, 3}, {4, 5}}), kNonEmpty).size(), 1u);
  // Intervals: the best clique is the deepest point's stabbing set.
  Dice dice(54);
  for (int t = 0; t < 100; ++t) {
    Family f = testing::random_boxes(dice, 1, 12, 20);
    std::size_t depth = 0;
    for (long long x = 0; x <= 20; ++x) {
      std::size_t here = 0;
      for (const HSet& s : f.members()) here += s.contains(std::vector<Rational>{Rational(x)}) ? 1 : 0;
      depth = std::max(depth, here);
    }
    auto best = brute_best_subfamily(f, kNonEmpty);
    EXPECT_EQ(best.size(), depth);
    EXPECT_TRUE(eval(kNonEmpty, intersect(f.subfamily_by_ids(best))));
  }
}

TEST(BrutePierce, Examples) {
  auto one = brute_pierce(intervals({{0, 5}, {1, 4}, {2, 6}}), kNonEmpty, 4);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->pins.size(), 1u);
  auto two = brute_pierce(intervals({{0, 1}, {2, 3}, {0, 3}}), kNonEmpty, 4);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->pins.size(), 2u);
  EXPECT_TRUE(verify_certificate(intervals({{0, 1}, {2, 3}, {0, 3}}), kNonEmpty, *two));
  Family spread = intervals({{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  EXPECT_FALSE(brute_pierce(spread, kNonEmpty, 4));
  auto report = pq_pierce(spread, kNonEmpty, 1, 1);
  EXPECT_GT(report.greedy_size, 4u);
}

TEST(BruteDensity, MatchesDefinition) {
  Family f = intervals({{0, 1}, {2, 3}, {0, 3}});
  auto c = brute_density(f, 2, kNonEmpty);
  EXPECT_EQ(c.intersecting, 2u);
  EXPECT_EQ(c.total, 3u);
  EXPECT_EQ(brute_density(f, 3, kNonEmpty).intersecting, 0u);
}

TEST(BruteProduct, Examples) {
  Family f = intervals({{0, 1}, {2, 3}, {0, 3}});
  EXPECT_TRUE(brute_product_has_tuple(f, kNonEmpty, {{"i0"}, {"i2"}}));
  EXPECT_FALSE(brute_product_has_tuple(f, kNonEmpty, {{"i0"}, {"i1"}}));
  EXPECT_THROW(brute_product_has_tuple(f, kNonEmpty, {{"zz"}, {"i1"}}), Error);
}

TEST(Verify, StrongHellyMutations) {
  Family f = intervals({{0, 5}, {1, 4}, {2, 6}});
  auto w = strong_helly_witness(f);
  ASSERT_TRUE(verify_certificate(f, w));
  auto bad = w;
  bad.intersection[0] += Rational(1);
  EXPECT_FALSE(verify_certificate(f, bad));
  bad = w;
  bad.attained_by[0] = "i0";
  EXPECT_FALSE(verify_certificate(f, bad));
  bad = w;
  bad.ids.pop_back();
  EXPECT_FALSE(verify_certificate(f, bad));
  bad = w;
  bad.ids[0] = "missing";
  EXPECT_THROW(verify_certificate(f, bad), Error);
}

TEST(Verify, SelectionMutations) {
  Dice dice(55);
  auto system = canonical_box_system(2);
  std::vector<Family> classes;
  for (int c = 0; c < 4; ++c) {
    Family f(system);
    for (int i = 0; i < 3; ++i) f.add("c" + std::to_string(c) + "_" + std::to_string(i), box_to_hset(testing::random_box(dice, 2, 10), system));
    classes.push_back(f);
  }
  ColorClasses cc(classes);
  auto w = colorful_select(cc);
  ASSERT_TRUE(verify_certificate(cc, w));
  auto flipped = w;
  // Flip one recorded comparison: claim the member's offset sits below the bound.
  auto& b = flipped.certificate[0].bounds[0];
  b.member_offset = b.bound - Rational(1);
  EXPECT_FALSE(verify_certificate(cc, flipped));
  auto pivot = w;
  pivot.pivot_class = (w.pivot_class + 1) % 4;
  EXPECT_FALSE(verify_certificate(cc, pivot));
  auto short_cert = w;
  short_cert.certificate.pop_back();
  EXPECT_FALSE(verify_certificate(cc, short_cert));
}

TEST(Verify, ChainMutations) {
  Family f = intervals({{0, 1}, {-1, 2}, {-2, 3}});
  auto w = consistent_chain(f, 3);
  ASSERT_TRUE(w);
  auto bad = *w;
  bad.directions[1] = ChainDirection::Descending;
  EXPECT_FALSE(verify_certificate(f, bad));
  bad = *w;
  std::swap(bad.ids[0], bad.ids[2]);
  EXPECT_FALSE(verify_certificate(f, bad));
  bad = *w;
  bad.ids[1] = bad.ids[0];
  EXPECT_FALSE(verify_certificate(f, bad));
}

TEST(Verify, PiercingMutations) {
  Family f = intervals({{0, 1}, {2, 3}, {0, 3}});
  auto r = pq_pierce(f, kNonEmpty, 3, 2);
  auto pins = std::get<PiercingFamily>(r.outcome);
  ASSERT_TRUE(verify_certificate(f, kNonEmpty, pins));
  auto bad = pins;
  bad.cover[0] = 1 - bad.cover[0];
  EXPECT_FALSE(verify_certificate(f, kNonEmpty, bad));
  bad = pins;
  bad.pins[0].set = HSet(f.system(), {Rational(-1), Rational(0)});
  EXPECT_FALSE(verify_certificate(f, kNonEmpty, bad));
}

TEST(Verify, HypothesisFailureMutations) {
  Family f = intervals({{0, 1}, {2, 3}, {4, 5}, {0, 5}});
  HypothesisFailed good{HypothesisFailed::Reason::NoIntersectingQSubset, {"i0", "i1", "i2"}};
  EXPECT_TRUE(verify_certificate(f, kNonEmpty, 3, 2, good));
  HypothesisFailed bad{HypothesisFailed::Reason::NoIntersectingQSubset, {"i0", "i1", "i3"}};
  EXPECT_FALSE(verify_certificate(f, kNonEmpty, 3, 2, bad));
  HypothesisFailed wrong_reason{HypothesisFailed::Reason::MemberFailsProperty, {"i0"}};
  EXPECT_FALSE(verify_certificate(f, kNonEmpty, 3, 2, wrong_reason));
}

TEST(LimitsConfig, Parse) {
  Limits l = Limits::parse("brute_family=24,pierce_family=14");
  EXPECT_EQ(l.brute_family, 24u);
  EXPECT_EQ(l.pierce_family, 14u);
  EXPECT_EQ(l.pq_family, Limits::defaults().pq_family);
  EXPECT_THROW(Limits::parse("nope=1"), Error);
  EXPECT_THROW(Limits::parse("brute_family=x"), Error);
}

}  // namespace
}  // namespace helly
