#include <gtest/gtest.h>

#include <optional>

#include "helly/error.hpp"
#include "helly/properties.hpp"
#include "test_support.hpp"

namespace helly {
namespace {

using testing::Dice;

Box make_box(std::vector<long long> lo, std::vector<long long> hi, long long den = 1) {
  Box b;
  for (auto x : lo) b.lo.push_back(Rational(x, den));
  for (auto x : hi) b.hi.push_back(Rational(x, den));
  return b;
}

Rational dot(const Vector& a, const Vector& x) {
  Rational s(0);
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
  return s;
}

bool satisfies(const HSystem& system, const Vector& offsets, const Vector& x) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (offsets[i] < dot(system.normal(i), x)) return false;
  }
  return true;
}

/// Exact planar feasibility: a nonempty pointed polyhedron has a vertex, and
/// without two independent normals the problem is one-dimensional.
bool planar_feasible(const HSystem& system, const Vector& offsets) {
  const std::size_t k = system.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vector& a = system.normal(i);
      const Vector& b = system.normal(j);
      const Rational det = a[0] * b[1] - a[1] * b[0];
      if (det.sign() == 0) continue;
      Vector x{(offsets[i] * b[1] - offsets[j] * a[1]) / det, (a[0] * offsets[j] - b[0] * offsets[i]) / det};
      if (satisfies(system, offsets, x)) return true;
    }
  }
  // Either infeasible or every normal is parallel to a single direction u.
  const Vector& u = system.normal(0);
  for (std::size_t i = 1; i < k; ++i) {
    const Vector& a = system.normal(i);
    if ((a[0] * u[1] - a[1] * u[0]).sign() != 0) return false;
  }
  // a_i = lambda_i u; constraint lambda_i t <= b_i on t = <u, x>.
  const std::size_t axis = u[0].sign() != 0 ? 0 : 1;
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational lambda = system.normal(i)[axis] / u[axis];
    const Rational bound = offsets[i] / lambda;
    if (lambda.sign() > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else if (!lo || *lo < bound) {
      lo = bound;
    }
  }
  return !lo || !hi || *lo <= *hi;
}

TEST(Properties, SpecExamples) {
  auto s2 = canonical_box_system(2);
  for (std::size_t d = 1; d <= 4; ++d) {
    EXPECT_TRUE(eval(MonotoneProperty::non_empty(), box_to_hset(Box{Vector(d, Rational(0)), Vector(d, Rational(1))})));
  }
  EXPECT_FALSE(eval(MonotoneProperty::volume_at_least(Rational(1)),
                    box_to_hset(Box{{Rational(0), Rational(0)}, {Rational(1), Rational(1, 2)}}, s2)));
  auto three = MonotoneProperty::contains_at_least(
      2, {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(5), Rational(5)}});
  EXPECT_TRUE(eval(three, box_to_hset(make_box({0, 0}, {2, 2}), s2)));
}

TEST(Properties, Errors) {
  auto general = make_system(1, {{Rational(1)}, {Rational(-2)}});
  HSet h(general, {Rational(1), Rational(1)});
  try {
    eval(MonotoneProperty::volume_at_least(Rational(1)), h);
    FAIL() << "volume on a general system";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "volume unsupported");
  }
  auto pts = MonotoneProperty::contains_at_least(1, {{Rational(0), Rational(0)}});
  EXPECT_THROW(eval(pts, h), Error);
  std::vector<Vector> bad{{Rational(0), Rational(0)}};
  EXPECT_THROW(count_points(h, bad), Error);
}

TEST(Properties, FeasibleExamples) {
  EXPECT_TRUE(feasible(box_to_hset(make_box({0}, {0}))));
  HSet contradiction(make_system(1, {{Rational(1)}, {Rational(-1)}}), {Rational(0), Rational(-1)});
  EXPECT_FALSE(feasible(contradiction));
  // Same constraints as a box system: x <= 0 and x >= 1.
  EXPECT_FALSE(feasible(HSet(canonical_box_system(1), {Rational(0), Rational(-1)})));
}

TEST(Properties, BoxVolume) {
  EXPECT_EQ(box_volume(make_box({0, 0, 0}, {1, 1, 1})), Rational(1));
  EXPECT_EQ(box_volume(make_box({0, 3}, {1, 2})), Rational(0));
  EXPECT_EQ(box_volume(Box{{Rational(0), Rational(0)}, {Rational(2), Rational(3, 2)}}), Rational(3));
}

TEST(Properties, CountPointsExamples) {
  HSet unit = box_to_hset(make_box({0, 0}, {1, 1}));
  EXPECT_EQ(count_points(unit, std::vector<Vector>{}), 0u);
  EXPECT_EQ(count_points(unit, std::vector<Vector>{{Rational(1, 2), Rational(1, 2)}}), 1u);
}

TEST(Properties, FeasibleOnBoxesMatchesIntervals) {
  Dice dice(21);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t d = static_cast<std::size_t>(dice.between(1, 4));
    auto system = canonical_box_system(d);
    Vector offsets(2 * d);
    bool expected = true;
    for (std::size_t j = 0; j < d; ++j) {
      const Rational lo(dice.between(-6, 6), dice.between(1, 3));
      const Rational hi(dice.between(-6, 6), dice.between(1, 3));
      offsets[2 * j] = hi;
      offsets[2 * j + 1] = -lo;
      expected = expected && lo <= hi;
    }
    EXPECT_EQ(feasible(*system, offsets), expected);
    std::vector<std::size_t> order(d);
    for (std::size_t j = 0; j < d; ++j) order[j] = d - 1 - j;
    EXPECT_EQ(fourier_motzkin_feasible(*system, offsets, order), expected);
  }
}

TEST(Properties, FourierMotzkinMatchesPlanarOracle) {
  Dice dice(22);
  int feasible_count = 0;
  for (int t = 0; t < 2000; ++t) {
    auto system = testing::random_system(dice, 2, static_cast<std::size_t>(dice.between(1, 8)));
    Vector offsets(system->size());
    for (auto& b : offsets) b = Rational(dice.between(-6, 6), dice.between(1, 3));
    const bool expected = planar_feasible(*system, offsets);
    feasible_count += expected ? 1 : 0;
    std::vector<std::size_t> xy{0, 1}, yx{1, 0};
    EXPECT_EQ(fourier_motzkin_feasible(*system, offsets, xy), expected);
    EXPECT_EQ(fourier_motzkin_feasible(*system, offsets, yx), expected);
    EXPECT_EQ(feasible(*system, offsets), expected);
  }
  EXPECT_GT(feasible_count, 200);
  EXPECT_LT(feasible_count, 1800);
}

TEST(Properties, FourierMotzkinAgreesAcrossOrdersAndGrid) {
  Dice dice(23);
  for (int t = 0; t < 400; ++t) {
    auto system = testing::random_system(dice, 3, static_cast<std::size_t>(dice.between(2, 8)));
    Vector offsets(system->size());
    for (auto& b : offsets) b = Rational(dice.between(-4, 8));
    std::vector<std::size_t> a{0, 1, 2}, b{2, 0, 1};
    const bool fm = fourier_motzkin_feasible(*system, offsets, a);
    EXPECT_EQ(fm, fourier_motzkin_feasible(*system, offsets, b));
    bool grid = false;
    for (long long x = -8; x <= 8 && !grid; ++x) {
      for (long long y = -8; y <= 8 && !grid; ++y) {
        for (long long z = -8; z <= 8 && !grid; ++z) {
          grid = satisfies(*system, offsets, Vector{Rational(x, 2), Rational(y, 2), Rational(z, 2)});
        }
      }
    }
    if (grid) EXPECT_TRUE(fm);
  }
}

TEST(Properties, CountPointsMatchesNaive) {
  Dice dice(24);
  for (int t = 0; t < 200; ++t) {
    auto system = testing::random_system(dice, 2, 4);
    Family f = testing::random_hsets(dice, system, 3);
    std::vector<Vector> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({Rational(dice.between(-12, 12), 2), Rational(dice.between(-12, 12), 2)});
    for (const HSet& s : f.members()) {
      std::size_t naive = 0;
      for (const auto& p : pts) naive += satisfies(*system, s.offsets(), p) ? 1 : 0;
      EXPECT_EQ(count_points(s, pts), naive);
    }
    std::size_t common = 0;
    for (const auto& p : pts) {
      bool all = true;
      for (const HSet& s : f.members()) all = all && satisfies(*system, s.offsets(), p);
      common += all ? 1 : 0;
    }
    EXPECT_EQ(count_points(intersect(f), pts), common);
  }
}

TEST(Properties, VolumeThresholdsOnEmptyBoxes) {
  Box empty = make_box({0, 2}, {1, 1});
  EXPECT_TRUE(eval(MonotoneProperty::volume_at_least(Rational(0)), box_to_hset(empty)));
  EXPECT_FALSE(eval(MonotoneProperty::volume_at_least(Rational(1, 1000)), box_to_hset(empty)));
}

MonotoneProperty random_leaf(Dice& dice, std::size_t dim, bool boxes) {
  const long long pick = dice.between(0, boxes ? 2 : 1);
  if (pick == 0) return MonotoneProperty::non_empty();
  if (pick == 1) {
    std::vector<Vector> pts;
    for (int i = 0; i < 6; ++i) {
      Vector p(dim);
      for (auto& x : p) x = Rational(dice.between(-4, 10), 2);
      pts.push_back(p);
    }
    return MonotoneProperty::contains_at_least(static_cast<std::size_t>(dice.between(1, 3)), pts);
  }
  return MonotoneProperty::volume_at_least(Rational(dice.between(0, 40), 4));
}

MonotoneProperty random_property(Dice& dice, std::size_t dim, bool boxes, int depth) {
  if (depth == 0 || dice.between(0, 2) == 0) return random_leaf(dice, dim, boxes);
  std::vector<MonotoneProperty> parts;
  const long long n = dice.between(1, 3);
  for (long long i = 0; i < n; ++i) parts.push_back(random_property(dice, dim, boxes, depth - 1));
  return dice.coin() ? MonotoneProperty::all_of(parts) : MonotoneProperty::any_of(parts);
}

void check_monotone(Dice& dice, const MonotoneProperty& p, const SystemPtr& system, int pairs) {
  for (int t = 0; t < pairs; ++t) {
    Vector small(system->size()), big(system->size());
    for (std::size_t i = 0; i < small.size(); ++i) {
      small[i] = Rational(dice.between(-4, 10), dice.between(1, 2));
      big[i] = small[i] + Rational(dice.between(0, 6), 2);
    }
    ASSERT_TRUE(offset_leq(small, big));
    if (eval(p, *system, small)) ASSERT_TRUE(eval(p, *system, big));
  }
}

TEST(Properties, BuiltinsAreMonotone) {
  Dice dice(25);
  for (std::size_t d = 1; d <= 3; ++d) {
    auto boxes = canonical_box_system(d);
    auto general = testing::random_system(dice, d, 2 * d + 1);
    check_monotone(dice, MonotoneProperty::non_empty(), boxes, 2000);
    check_monotone(dice, MonotoneProperty::non_empty(), general, 2000);
    check_monotone(dice, MonotoneProperty::volume_at_least(Rational(3, 2)), boxes, 2000);
    check_monotone(dice, random_leaf(dice, d, false), general, 2000);
  }
}

TEST(Properties, CompositionsAreMonotone) {
  Dice dice(26);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(dice.between(1, 3));
    const bool boxes = dice.coin();
    auto system = boxes ? canonical_box_system(d) : testing::random_system(dice, d, d + 2);
    check_monotone(dice, random_property(dice, d, boxes, 3), system, 300);
  }
}

}  // namespace
}  // namespace helly
