#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pierce/constructions.hpp"

namespace pierce {
namespace {

using test::fp;
using test::inf;
using test::pt;
using test::q;
using P2 = ProjPoint<Rational>;
using L2 = ProjLine<Rational>;

TEST(Collinear, PointsOnDiagonal) { EXPECT_TRUE(collinear(pt(0, 0), pt(1, 1), pt(2, 2))); }

TEST(Collinear, Triangle) { EXPECT_FALSE(collinear(pt(0, 0), pt(1, 0), pt(0, 1))); }

TEST(Collinear, ThreeLineSlope) { EXPECT_TRUE(collinear(pt(0, 0), pt(-4, 1), pt(-8, 2))); }

TEST(Collinear, MixedFieldsRejected) {
  EXPECT_THROW(collinear(fp(5, 0, 0), fp(7, 1, 1), fp(5, 2, 2)), UsageError);
}

TEST(Collinear, PointAtInfinityOnParallelClass) {
  EXPECT_TRUE(collinear(pt(0, 0), pt(1, 2), inf(1, 2)));
  EXPECT_FALSE(collinear(pt(0, 0), pt(1, 2), inf(2, 1)));
}

TEST(Collinear, PermutationAndScalingInvariant) {
  auto gen = test::rng(1);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 400; ++trial) {
    std::array<P2, 3> ps{pt(d(gen), d(gen)), pt(d(gen), d(gen)), pt(d(gen), d(gen))};
    bool base = collinear(ps[0], ps[1], ps[2]);
    std::array<int, 3> perm{0, 1, 2};
    do {
      EXPECT_EQ(collinear(ps[perm[0]], ps[perm[1]], ps[perm[2]]), base);
    } while (std::next_permutation(perm.begin(), perm.end()));
    int sn = d(gen);
    Rational s = q(sn == 0 ? 7 : sn, 5);
    P2 scaled(ps[0].X() * s, ps[0].Y() * s, ps[0].Z() * s);
    EXPECT_EQ(scaled, ps[0]);
    EXPECT_EQ(collinear(scaled, ps[1], ps[2]), base);
  }
}

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through(pt(0, 0), pt(1, 1)), L2(q(1), q(-1), q(0)));
  EXPECT_EQ(line_through(pt(0, 0), pt(1, 0)), L2(q(0), q(1), q(0)));
  EXPECT_EQ(line_through(pt(2, 3), pt(0, 1)), L2(q(1), q(-1), q(1)));
}

TEST(LineThrough, EqualPointsRejected) { EXPECT_THROW(line_through(pt(1, 2), pt(1, 2)), DegenerateInput); }

TEST(LineThrough, IncidentToBoth) {
  auto gen = test::rng(2);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    P2 a = pt(d(gen), d(gen)), b = pt(d(gen), d(gen));
    if (a == b) continue;
    auto l = line_through(a, b);
    EXPECT_TRUE(incident(a, l));
    EXPECT_TRUE(incident(b, l));
  }
}

TEST(DirectionOf, Examples) {
  EXPECT_EQ(direction_of(L2(q(1), q(-1), q(1))), inf(1, 1));
  EXPECT_EQ(direction_of(L2(q(0), q(1), q(0))), inf(1, 0));
  EXPECT_EQ(direction_of(L2(q(1), q(0), q(0))), inf(0, 1));
}

TEST(DirectionOf, LineAtInfinityRejected) { EXPECT_THROW(direction_of(L2(q(0), q(0), q(1))), DegenerateInput); }

TEST(GeneralPosition, Examples) {
  auto sq = test::unit_square();
  EXPECT_TRUE(is_general_position<Rational>(sq));
  std::vector<P2> bad{pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 5)};
  EXPECT_FALSE(is_general_position<Rational>(bad));
  auto cfg = three_line_bipartite();
  std::vector<P2> bg(cfg[Role::B].begin(), cfg[Role::B].end());
  bg.insert(bg.end(), cfg[Role::G].begin(), cfg[Role::G].end());
  EXPECT_TRUE(is_general_position<Rational>(bg));
}

TEST(GeneralPosition, DuplicatesRejected) {
  std::vector<P2> dup{pt(0, 0), pt(1, 0), pt(0, 0)};
  EXPECT_THROW(is_general_position<Rational>(dup), UsageError);
}

TEST(DeterminedLines, Counts) {
  std::vector<P2> two{pt(0, 0), pt(3, 1)};
  EXPECT_EQ(determined_lines<Rational>(two).size(), 1u);
  auto sq = test::unit_square();
  EXPECT_EQ(determined_lines<Rational>(sq).size(), 6u);
  auto hex = lattice_hexagon();
  EXPECT_EQ(determined_lines<Rational>(hex).size(), 15u);
}

TEST(DeterminedLines, GeneralPositionGivesBinomial) {
  auto gen = test::rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  int checked = 0;
  while (checked < 60) {
    std::vector<P2> s;
    for (int i = 0; i < 5; ++i) s.push_back(pt(d(gen), d(gen)));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
    auto lines = determined_lines<Rational>(s);
    if (is_general_position<Rational>(s)) {
      EXPECT_EQ(lines.size(), 10u);
      ++checked;
    } else {
      EXPECT_LT(lines.size(), 10u);
    }
  }
}

TEST(CheckPiercing, TwoPoint) {
  std::vector<P2> P{pt(0, 0), pt(1, 0)}, R{pt(2, 0)};
  EXPECT_TRUE(check_piercing<Rational>(P, R).pierced);
}

TEST(CheckPiercing, CompleteQuadrilateral) {
  auto sq = test::unit_square();
  std::vector<P2> R{inf(1, 0), inf(0, 1), P2(q(1), q(1), q(2))};
  EXPECT_TRUE(check_piercing<Rational>(sq, R).pierced);
}

TEST(CheckPiercing, SquareWithOneDirectionFails) {
  auto sq = test::unit_square();
  std::vector<P2> R{inf(1, 0)};
  auto v = check_piercing<Rational>(sq, R);
  ASSERT_FALSE(v.pierced);
  ASSERT_TRUE(v.witness);
  EXPECT_FALSE(collinear(v.witness->first, v.witness->second, inf(1, 0)));
}

TEST(CheckPiercing, OverlapRejected) {
  std::vector<P2> P{pt(0, 0), pt(1, 0)}, R{pt(1, 0)};
  EXPECT_THROW(check_piercing<Rational>(P, R), UsageError);
}

TEST(CheckPiercing, MonotoneInR) {
  auto gen = test::rng(4);
  std::uniform_int_distribution<int> d(-4, 4);
  auto sq = test::unit_square();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<P2> R{inf(1, 0), inf(0, 1), P2(q(1), q(1), q(2))};
    P2 extra = pt(d(gen) + 7, d(gen));
    R.push_back(extra);
    EXPECT_TRUE(check_piercing<Rational>(sq, R).pierced);
    std::vector<P2> partial{inf(1, 0)};
    bool before = check_piercing<Rational>(sq, partial).pierced;
    partial.push_back(extra);
    EXPECT_TRUE(!before || check_piercing<Rational>(sq, partial).pierced);
  }
}

TEST(CheckPiercingBipartite, ThreeLineInstance) {
  auto cfg = three_line_bipartite();
  EXPECT_TRUE(check_piercing_bipartite<Rational>(cfg[Role::B], cfg[Role::G], cfg[Role::R]).pierced);
  EXPECT_TRUE(collinear(pt(0, 0), pt(-4, 1), pt(-8, 2)));
}

TEST(CheckPiercingBipartite, SingleTriple) {
  std::vector<P2> B{pt(0, 0)}, G{pt(1, 0)}, R{inf(1, 0)};
  EXPECT_TRUE(check_piercing_bipartite<Rational>(B, G, R).pierced);
}

TEST(CheckPiercingBipartite, WitnessOnFailure) {
  std::vector<P2> B{pt(0, 0)}, G{pt(1, 0), pt(0, 1)}, R{inf(1, 0)};
  auto v = check_piercing_bipartite<Rational>(B, G, R);
  ASSERT_FALSE(v.pierced);
  EXPECT_EQ(v.witness->second, pt(0, 1));
}

// Every triple of F_5^2 affine points: the projective determinant agrees with
// the slope test done by hand in integers.
TEST(PrimeField, CollinearityMatchesAffineSlopes) {
  const std::uint32_t p = 5;
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) pts.emplace_back(x, y);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        auto [x1, y1] = pts[i];
        auto [x2, y2] = pts[j];
        auto [x3, y3] = pts[k];
        int cross = ((x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)) % 5;
        EXPECT_EQ(collinear(fp(p, x1, y1), fp(p, x2, y2), fp(p, x3, y3)), cross == 0);
      }
}

TEST(PrimeField, LinesThroughPairsOfAPlaneOverF3) {
  std::vector<ProjPoint<ModP>> all;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) all.push_back(fp(3, x, y));
  for (int x = 0; x < 3; ++x) all.push_back(fp(3, 1, x, 0));
  all.push_back(fp(3, 0, 1, 0));
  // P^2(F_3) has 13 points and 13 lines
  EXPECT_EQ(determined_lines<ModP>(all).size(), 13u);
}

TEST(PointConfig, RejectsOverlapAndRepeats) {
  using Roles = std::map<Role, std::vector<P2>>;
  EXPECT_THROW(PointConfig<Rational>(FieldSpec::rational(), Roles{{Role::P, {pt(0, 0), pt(0, 0)}}}), UsageError);
  EXPECT_THROW(PointConfig<Rational>(FieldSpec::rational(), Roles{{Role::P, {pt(0, 0)}}, {Role::R, {pt(0, 0)}}}),
               UsageError);
  EXPECT_THROW(PointConfig<ModP>(FieldSpec::prime(7), std::map<Role, std::vector<ProjPoint<ModP>>>{
                                                          {Role::P, {fp(5, 0, 0)}}}),
               UsageError);
}

}  // namespace
}  // namespace pierce
