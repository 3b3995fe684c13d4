#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "pierce/conic_line.hpp"
#include "pierce/oracles.hpp"

namespace pierce {
namespace {

using test::q;

ProjPoint<Rational> dir(std::int64_t x, std::int64_t y) { return ProjPoint<Rational>(q(x), q(y), q(0)); }

TEST(PhiQ, Examples) {
  EXPECT_EQ(phi_Q(GTElement::parabola(q(2))), test::pt(2, 4));
  EXPECT_EQ(phi_Q(GTElement::hyperbola(q(2))), test::pq(q(2), q(1, 2)));
  EXPECT_EQ(phi_Q(GTElement::ellipse_tan(q(0))), test::pt(1, 0));
  EXPECT_EQ(phi_Q(GTElement::ellipse_tan(q(1))), test::pt(0, 1));
  EXPECT_EQ(phi_Q(GTElement::ellipse(HalfAngle::infinity())), test::pt(-1, 0));
}

TEST(PhiEll, Examples) {
  EXPECT_EQ(phi_ell(GTElement::parabola(q(-3))), dir(1, 3));
  EXPECT_EQ(phi_ell(GTElement::hyperbola(q(1, 2))), ProjPoint<Rational>(q(1), q(-1, 2), q(0)));
  EXPECT_EQ(phi_ell(GTElement::ellipse_tan(q(-1))), dir(1, -1));
  EXPECT_TRUE(phi_ell(GTElement::parabola(q(7, 3))).at_infinity());
}

TEST(PhiQ, LandsOnTheConic) {
  auto gen = test::rng(40);
  std::uniform_int_distribution<std::int64_t> d(-30, 30), den(1, 12);
  for (int i = 0; i < 300; ++i) {
    Rational r = q(d(gen), den(gen));
    EXPECT_TRUE(on_conic(phi_Q(GTElement::parabola(r)), ConicKind::parabola));
    EXPECT_TRUE(on_conic(phi_Q(GTElement::ellipse_tan(r)), ConicKind::ellipse));
    if (!is_zero(r)) EXPECT_TRUE(on_conic(phi_Q(GTElement::hyperbola(r)), ConicKind::hyperbola));
  }
}

TEST(GroupLaw, CollinearityExamples) {
  auto p = gt_collinear_check(GTElement::parabola(q(1)), GTElement::parabola(q(2)), GTElement::parabola(q(-3)));
  EXPECT_TRUE(p.group_zero && p.geometric_collinear);
  auto h = gt_collinear_check(GTElement::hyperbola(q(1)), GTElement::hyperbola(q(2)),
                              GTElement::hyperbola(q(1, 2)));
  EXPECT_TRUE(h.group_zero && h.geometric_collinear);
  auto e = gt_collinear_check(GTElement::ellipse_tan(q(0)), GTElement::ellipse_tan(q(1)),
                              GTElement::ellipse_tan(q(-1)));
  EXPECT_TRUE(e.group_zero && e.geometric_collinear);
  auto off = gt_collinear_check(GTElement::parabola(q(1)), GTElement::parabola(q(2)), GTElement::parabola(q(3)));
  EXPECT_FALSE(off.group_zero || off.geometric_collinear);
}

TEST(GroupLaw, HyperbolaRejectsZero) { EXPECT_THROW(GTElement::hyperbola(q(0)), DegenerateInput); }

TEST(GroupLaw, RandomSamplesAgree) {
  for (auto kind : {ConicKind::parabola, ConicKind::hyperbola, ConicKind::ellipse}) {
    auto r = oracle::gt_samples(kind, 1000, 77);
    EXPECT_TRUE(r.ok()) << r.reproducer.value_or("");
    EXPECT_GE(r.hypothesis_cases, 400u);
  }
}

TEST(GroupLaw, MutantIsCaught) {
  auto r = oracle::gt_samples(ConicKind::parabola, 200, 5, oracle::Mutant::negated_determinant);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.reproducer.has_value());
}

TEST(GroupLaw, HalfAngleAdditionIsRotation) {
  auto a = HalfAngle::from_tan(q(1, 2)), b = HalfAngle::from_tan(q(3));
  auto s = a + b;
  // tan(x + y) = (1/2 + 3) / (1 - 3/2) = -7
  EXPECT_EQ(s.s() / s.c(), q(-7));
  EXPECT_TRUE((a + (-a)).is_identity());
  EXPECT_EQ(HalfAngle::infinity() + HalfAngle::infinity(), HalfAngle());
}

TEST(Obstruction, Values) {
  EXPECT_EQ(finite_subgroup_obstruction(ConicKind::parabola), 2u);
  EXPECT_EQ(finite_subgroup_obstruction(ConicKind::hyperbola), 2u);
  EXPECT_FALSE(finite_subgroup_obstruction(ConicKind::ellipse).has_value());
}

TEST(Obstruction, OnlyTrivialRootsOfUnityInRationals) {
  MultiplicativeRationals g;
  auto gen = test::rng(41);
  std::uniform_int_distribution<std::int64_t> d(-50, 50), den(1, 20);
  for (int i = 0; i < 2000; ++i) {
    Rational z = q(d(gen), den(gen));
    if (is_zero(z)) continue;
    if (g.add(z, z) == g.identity()) EXPECT_TRUE(z == q(1) || z == q(-1));
    EXPECT_EQ(g.exceeds_guard(z), z != q(1) && z != q(-1));
    auto t = GTElement::parabola(z);
    EXPECT_FALSE(gt_is_identity(gt_add(t, t)));
  }
}

TEST(PullBack, InvertsTheMaps) {
  auto gen = test::rng(42);
  std::uniform_int_distribution<std::int64_t> d(-20, 20), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    Rational r = q(d(gen), den(gen));
    for (auto x : {GTElement::parabola(r), GTElement::ellipse_tan(r)}) {
      EXPECT_EQ(pull_back_conic(phi_Q(x), x.kind()), x);
      EXPECT_EQ(pull_back_line(phi_ell(x), x.kind()), x);
    }
    if (!is_zero(r)) {
      auto x = GTElement::hyperbola(r);
      EXPECT_EQ(pull_back_conic(phi_Q(x), x.kind()), x);
      EXPECT_EQ(pull_back_line(phi_ell(x), x.kind()), x);
    }
  }
}

TEST(PullBack, OutsideTheImage) {
  // (0 : 1 : 0) is the vertical direction; the parabola's image misses it, the
  // hyperbola's image misses both axes.
  EXPECT_THROW(pull_back_line(dir(0, 1), ConicKind::parabola), DegenerateInput);
  EXPECT_THROW(pull_back_line(dir(1, 0), ConicKind::hyperbola), DegenerateInput);
  EXPECT_THROW(pull_back_line(dir(0, 1), ConicKind::hyperbola), DegenerateInput);
  EXPECT_THROW(pull_back_conic(test::pt(1, 2), ConicKind::parabola), DegenerateInput);
}

TEST(ChordClass, Examples) {
  auto c = direction_class_of_chord(AngleElem::of(0, 1), AngleElem::of(1, 4));
  EXPECT_EQ(c.cls, AngleElem::of(1, 4));
  EXPECT_FALSE(c.tangent);
  auto t = direction_class_of_chord(AngleElem::of(1, 3), AngleElem::of(1, 3));
  EXPECT_TRUE(t.tangent);
  EXPECT_EQ(t.cls, AngleElem::of(2, 3));
  auto w = direction_class_of_chord(AngleElem::of(1, 6, 1), AngleElem::of(1, 2, -1));
  EXPECT_EQ(w.cls, AngleElem::of(2, 3));
}

TEST(ChordClass, CovariantUnderRotation) {
  auto gen = test::rng(43);
  std::uniform_int_distribution<std::int64_t> n(0, 23), c(-2, 2);
  for (int i = 0; i < 500; ++i) {
    auto a = AngleElem::of(n(gen), 24, c(gen)), b = AngleElem::of(n(gen), 24, c(gen));
    auto r = AngleElem::of(n(gen), 24, c(gen));
    auto base = direction_class_of_chord(a, b).cls;
    EXPECT_EQ(direction_class_of_chord(a + r, b + r).cls, base + r + r);
    EXPECT_EQ(direction_class_of_chord(b, a).cls, base);
  }
}

// Embeds parameters at a transcendental-looking display value and compares
// chord directions numerically against the exact class.
TEST(ChordClass, FloatingPointCrossCheck) {
  const double theta = std::numbers::sqrt2 / 10;
  auto point = [&](const AngleElem& e) {
    double a = 2 * std::numbers::pi * e.turns(theta);
    return std::pair{std::cos(a), std::sin(a)};
  };
  auto gen = test::rng(44);
  std::uniform_int_distribution<std::int64_t> n(0, 11), c(-1, 1);
  int equal = 0, different = 0;
  for (int i = 0; i < 1000; ++i) {
    AngleElem e[4];
    for (auto& x : e) x = AngleElem::of(n(gen), 12, c(gen));
    if (e[0] == e[1] || e[2] == e[3]) continue;
    auto [x0, y0] = point(e[0]);
    auto [x1, y1] = point(e[1]);
    auto [x2, y2] = point(e[2]);
    auto [x3, y3] = point(e[3]);
    double cross = (x1 - x0) * (y3 - y2) - (y1 - y0) * (x3 - x2);
    bool same = direction_class_of_chord(e[0], e[1]).cls == direction_class_of_chord(e[2], e[3]).cls;
    if (same) {
      ++equal;
      EXPECT_LT(std::abs(cross), 1e-9);
    } else {
      ++different;
      EXPECT_GT(std::abs(cross), 1e-6);
    }
  }
  EXPECT_GT(equal, 10);
  EXPECT_GT(different, 100);
}

TEST(ConicKind, Names) {
  for (auto k : {ConicKind::ellipse, ConicKind::parabola, ConicKind::hyperbola})
    EXPECT_EQ(parse_conic_kind(conic_kind_name(k)), k);
  EXPECT_THROW(parse_conic_kind("circle"), UsageError);
}

}  // namespace
}  // namespace pierce
