#include <gtest/gtest.h>

#include <bit>

#include "helpers.hpp"
#include "pierce/oracles.hpp"
#include "pierce/selftest.hpp"

namespace pierce::oracle {
namespace {

Mask mask_of(const SmallGroup& g, const GroupSet<FinAbGroup>& s) {
  Mask m = 0;
  for (const auto& e : s) m |= Mask{1} << g.group().index_of(e);
  return m;
}

std::vector<SmallGroup> groups() {
  std::vector<SmallGroup> out;
  for (unsigned k : {1u, 2u, 5u, 8u, 12u, 64u}) out.push_back(SmallGroup::cyclic(k));
  for (auto& g : small_noncyclic_groups(16)) out.push_back(g);
  return out;
}

TEST(SmallGroup, KernelsAgreeWithGenericCode) {
  auto gen = pierce::test::rng(60);
  for (const auto& g : groups()) {
    for (int t = 0; t < 200; ++t) {
      Mask a = gen() & g.full(), b = gen() & g.full();
      if (t % 3 == 0) a &= gen();
      auto sa = g.to_set(a), sb = g.to_set(b);
      EXPECT_EQ(mask_of(g, sa), a);
      EXPECT_EQ(g.sumset(a, b), mask_of(g, sumset(sa, sb))) << g.name() << " " << g.describe(a);
      if (std::popcount(a) >= 2)
        EXPECT_EQ(g.restricted_sumset(a), mask_of(g, restricted_sumset(sa))) << g.name() << " " << g.describe(a);
      EXPECT_EQ(g.negated(a), mask_of(g, negated(sa)));
      if (a) EXPECT_EQ(g.stabilizer(a), mask_of(g, GroupSet<FinAbGroup>(g.group(), stabilizer(sa).members)));
    }
  }
}

TEST(SmallGroup, NamesAndOrders) {
  EXPECT_EQ(SmallGroup({2, 4}).name(), "Z_2 x Z_4");
  EXPECT_EQ(SmallGroup::cyclic(9).order(), 9u);
  EXPECT_TRUE(SmallGroup::cyclic(9).is_cyclic());
  EXPECT_FALSE(SmallGroup({3, 3}).is_cyclic());
  for (const auto& g : small_noncyclic_groups(16)) {
    EXPECT_FALSE(g.is_cyclic());
    EXPECT_LE(g.order(), 16u);
  }
  EXPECT_EQ(SmallGroup::cyclic(64).full(), ~Mask{0});
}

TEST(SmallGroup, DoublingConstant) {
  EXPECT_EQ(SmallGroup::cyclic(7).doubling_constant(), 1u);
  EXPECT_EQ(SmallGroup::cyclic(8).doubling_constant(), 2u);
  EXPECT_EQ(SmallGroup({2, 2}).doubling_constant(), 4u);
  EXPECT_EQ(SmallGroup({2, 4}).doubling_constant(), 4u);
}

TEST(Suites, SmallSweepsPass) {
  for (unsigned k = 1; k <= 12; ++k) {
    auto r = lev_exhaustive(SmallGroup::cyclic(k));
    EXPECT_TRUE(r.ok()) << r.reproducer.value_or("");
    EXPECT_EQ(r.cases, (std::uint64_t{1} << k) - k - 1);  // subsets with two or more elements
  }
  for (unsigned k = 1; k <= 8; ++k) {
    auto r = lemma_exhaustive(SmallGroup::cyclic(k));
    EXPECT_TRUE(r.ok()) << r.reproducer.value_or("");
  }
  auto s = lev_sampled(30, 9, 200);
  EXPECT_TRUE(s.ok()) << s.reproducer.value_or("");
  EXPECT_GT(s.hypothesis_cases, 0u);
}

TEST(Suites, ReportMerge) {
  SuiteReport a{"x", 3, 1, 1, 0, std::nullopt}, b{"x", 2, 2, 0, 0, std::nullopt};
  b.fail("first");
  b.fail("second");
  a.merge(b);
  EXPECT_EQ(a.cases, 5u);
  EXPECT_EQ(a.failures, 2u);
  EXPECT_EQ(a.reproducer, "first");
}

TEST(Suites, EcMutantIsCaught) {
  auto curves = pierce::small_curves(5, 30);
  ASSERT_FALSE(curves.empty());
  auto r = ec_exhaustive(curves.front(), Mutant::negated_determinant);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.reproducer.has_value());
}

TEST(Selftest, DefaultsPassAndMutantFails) {
  pierce::SelftestOptions o;
  o.lev_bound = 10;
  o.lev_sample_bound = 20;
  o.lev_samples = 50;
  o.lemma_bound = 7;
  o.gt_samples = 200;
  EXPECT_TRUE(pierce::run_selftest(o, nullptr).ok());
  o.mutant = Mutant::negated_determinant;
  EXPECT_FALSE(pierce::run_selftest(o, nullptr).ok());
}

}  // namespace
}  // namespace pierce::oracle
