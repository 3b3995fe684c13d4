#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "pierce/cubic.hpp"
#include "pierce/oracles.hpp"
#include "pierce/selftest.hpp"

namespace pierce {
namespace {

using test::q;
using QPt = ECPoint<Rational>;
using FPt = ECPoint<ModP>;

WeierstrassCurve<Rational> qcurve(std::int64_t a, std::int64_t b) { return {q(a), q(b)}; }
WeierstrassCurve<ModP> fcurve(std::uint32_t p, std::int64_t a, std::int64_t b) { return {ModP(p, a), ModP(p, b)}; }
QPt qp(std::int64_t x, std::int64_t y) { return QPt::affine(q(x), q(y)); }
FPt fpt(std::uint32_t p, std::int64_t x, std::int64_t y) { return FPt::affine(ModP(p, x), ModP(p, y)); }

TEST(Curve, RejectsSingularAndSmallCharacteristic) {
  EXPECT_THROW(qcurve(0, 0), DegenerateInput);
  EXPECT_THROW(qcurve(-3, 2), DegenerateInput);
  EXPECT_THROW(fcurve(3, 1, 1), Unsupported);
  EXPECT_THROW(fcurve(2, 1, 1), Unsupported);
}

TEST(Add, Examples) {
  auto c = qcurve(0, 1);
  EXPECT_EQ(add(c, qp(2, 3), qp(0, 1)), qp(-1, 0));
  EXPECT_EQ(add(c, qp(2, 3), QPt::identity()), qp(2, 3));
  EXPECT_EQ(add(c, qp(-1, 0), qp(-1, 0)), QPt::identity());
  EXPECT_EQ(negate(c, qp(2, 3)), qp(2, -3));
}

TEST(Add, OffCurveRejected) {
  auto c = qcurve(0, 1);
  EXPECT_THROW(add(c, qp(1, 1), qp(0, 1)), UsageError);
}

TEST(ChordThird, Examples) {
  auto c = qcurve(0, 1);
  EXPECT_EQ(chord_third(c, qp(2, 3), qp(0, 1)), qp(-1, 0));
  EXPECT_TRUE(collinear(to_projective(c, qp(2, 3)), to_projective(c, qp(0, 1)), to_projective(c, qp(-1, 0))));
  EXPECT_EQ(chord_third(c, qp(2, 3), qp(2, -3)), QPt::identity());
}

// (0,1) is a flex of y^2 = x^3 + 1: the tangent y = 1 meets the curve only there.
TEST(ChordThird, TangentAtFlex) {
  auto c = qcurve(0, 1);
  EXPECT_EQ(tangent_third(c, qp(0, 1)), qp(0, 1));
  EXPECT_EQ(multiply(c, 2, qp(0, 1)), qp(0, -1));
  EXPECT_EQ(multiply(c, 3, qp(0, 1)), QPt::identity());
}

TEST(ChordThird, NegatedSumOverRationals) {
  auto c = qcurve(-2, 5);
  QPt g = qp(1, 2);
  ASSERT_TRUE(on_curve(c, g));
  std::vector<QPt> pts{QPt::identity(), g};
  for (int i = 2; i < 6; ++i) pts.push_back(add(c, pts.back(), g));
  for (const auto& a : pts)
    for (const auto& b : pts) {
      EXPECT_EQ(negate(c, add(c, a, b)), chord_third(c, a, b));
      EXPECT_EQ(add(c, a, b), add(c, b, a));
    }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_points(fcurve(7, 0, 1)).size(), 12u);
  EXPECT_EQ(enumerate_points(fcurve(5, -1, 0)).size(), 8u);
  for (const auto& c : small_curves(11, 100)) EXPECT_TRUE(enumerate_points(c).front().is_identity());
  EXPECT_THROW(enumerate_points(qcurve(0, 1)), Unsupported);
}

TEST(Enumerate, HasseBound) {
  for (std::uint32_t p : {5u, 7u, 11u, 13u})
    for (const auto& c : small_curves(p, 1000)) {
      double n = static_cast<double>(enumerate_points(c).size());
      EXPECT_LE(std::abs(n - (p + 1)), 2 * std::sqrt(static_cast<double>(p)) + 1e-9);
    }
}

TEST(SubgroupGenerated, RationalTorsion) {
  auto c = qcurve(0, 1);
  std::vector<QPt> gen{qp(2, 3)};
  auto r = subgroup_generated<Rational>(c, gen);
  ASSERT_TRUE(r.finite);
  std::set<QPt> expect{QPt::identity(), qp(2, 3), qp(2, -3), qp(0, 1), qp(0, -1), qp(-1, 0)};
  EXPECT_EQ(std::set<QPt>(r.points.begin(), r.points.end()), expect);
  std::vector<QPt> o{QPt::identity()};
  EXPECT_EQ(subgroup_generated<Rational>(c, o).points.size(), 1u);
}

TEST(SubgroupGenerated, NonTorsionHitsGuard) {
  auto c = qcurve(-2, 5);
  std::vector<QPt> gen{qp(1, 2)};
  EXPECT_FALSE(subgroup_generated<Rational>(c, gen).finite);
}

TEST(SubgroupGenerated, PrimeFieldGenerator) {
  auto c = fcurve(7, 0, 1);
  auto pts = enumerate_points(c);
  std::size_t largest = 0;
  for (const auto& g : pts) {
    std::vector<FPt> gen{g};
    auto r = subgroup_generated<ModP>(c, gen);
    ASSERT_TRUE(r.finite);
    EXPECT_EQ(pts.size() % r.points.size(), 0u);
    largest = std::max(largest, r.points.size());
  }
  // E(F_7) for y^2 = x^3 + 1 has full 2-torsion, so it is Z2 x Z6, not cyclic
  EXPECT_EQ(largest, 6u);
}

TEST(AllSubgroups, LatticeOfSmallCurve) {
  auto c = fcurve(7, 0, 1);
  auto subs = all_subgroups(c);
  std::multiset<std::size_t> orders;
  for (const auto& h : subs) orders.insert(h.size());
  // Z2 x Z6: one trivial, three of order 2, one of order 3, one Z2xZ2, three of order 6, the whole group
  EXPECT_EQ(orders, (std::multiset<std::size_t>{1, 2, 2, 2, 3, 4, 6, 6, 6, 12}));
  CurveGroup<ModP> g(c);
  for (const auto& h : subs)
    for (const auto& x : h)
      for (const auto& y : h) EXPECT_TRUE(std::binary_search(h.begin(), h.end(), g.add(x, y)));
}

TEST(TangentCount, Examples) {
  auto c7 = fcurve(7, 0, 1);
  std::size_t most = 0;
  for (const auto& a : enumerate_points(c7)) most = std::max(most, doubling_solutions(c7, a));
  EXPECT_EQ(most, 4u);
  EXPECT_EQ(doubling_constant(CurveGroup<ModP>(c7)), 4u);
  auto c5 = fcurve(5, -1, 0);
  ProjPoint<ModP> o(ModP(5, 0), ModP(5, 1), ModP(5, 0));
  EXPECT_EQ(tangent_count_through(o, c5), 4u);
  EXPECT_EQ(doubling_solutions(c5, FPt::identity()), 4u);
}

TEST(TangentCount, NeverAboveSixOverSmallFields) {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    auto curves = small_curves(p, 1000);
    for (std::size_t i = 0; i < curves.size(); i += 3) {
      const auto& c = curves[i];
      for (std::uint32_t x = 0; x < p; ++x)
        for (std::uint32_t y = 0; y < p; ++y) {
          ProjPoint<ModP> a(ModP(p, x), ModP(p, y), ModP(p, 1));
          EXPECT_LE(tangent_count_through(a, c), 6u);
        }
    }
  }
}

// The tangent at x meets the curve again at -2x, and the tangent at a always
// contains a; the two coincide exactly when 3a = O.
TEST(TangentCount, CurvePointMatchesDoubling) {
  auto c = fcurve(13, 2, 3);
  for (const auto& a : enumerate_points(c)) {
    if (a.is_identity()) continue;
    std::size_t expect = doubling_solutions(c, negate(c, a));
    if (!multiply(c, 3, a).is_identity()) ++expect;
    EXPECT_EQ(tangent_count_through(to_projective(c, a), c), expect);
  }
}

TEST(DoublingConstant, OverRationals) {
  EXPECT_EQ(doubling_constant(CurveGroup<Rational>(qcurve(0, 1))), 2u);
  EXPECT_EQ(doubling_constant(CurveGroup<Rational>(qcurve(-1, 0))), 4u);
  EXPECT_EQ(doubling_constant(CurveGroup<Rational>(qcurve(-2, 5))), 1u);
  WeierstrassCurve<Rational> scaled(q(-1, 4), q(0));  // roots 0, 1/2, -1/2
  EXPECT_EQ(doubling_constant(CurveGroup<Rational>(scaled)), 4u);
}

TEST(Associativity, ExhaustiveOnSmallCurves) {
  for (std::uint32_t p : {5u, 7u}) {
    for (const auto& c : small_curves(p, 30)) {
      auto r = oracle::ec_exhaustive(c);
      EXPECT_TRUE(r.ok()) << r.reproducer.value_or("");
    }
  }
}

TEST(Associativity, SampledOnLargerCurves) {
  auto gen = test::rng(30);
  for (std::uint32_t p : {11u, 13u}) {
    auto curves = small_curves(p, 1000);
    for (const auto& c : curves) {
      auto pts = enumerate_points(c);
      std::uniform_int_distribution<std::size_t> d(0, pts.size() - 1);
      for (int t = 0; t < 50; ++t) {
        const auto &a = pts[d(gen)], &b = pts[d(gen)], &e = pts[d(gen)];
        EXPECT_EQ(add(c, add(c, a, b), e), add(c, a, add(c, b, e)));
      }
    }
  }
}

}  // namespace
}  // namespace pierce
