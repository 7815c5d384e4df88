#include <gtest/gtest.h>

#include "liaison/error.hpp"
#include "liaison/linkage.hpp"
#include "liaison/presets.hpp"
#include "oracles.hpp"

using namespace liaison;

TEST(Verdict, ExplicitSpecIsSmoothable) {
  const Verdict v = smoothability_verdict(spec_preset("explicitA"));
  EXPECT_EQ(v.status, VerdictStatus::Smoothable);
  EXPECT_TRUE(v.connected);
  EXPECT_TRUE(v.alpha_ok);
  EXPECT_EQ(v.pivot, 28);
  ASSERT_TRUE(v.filtration);
  EXPECT_EQ(v.filtration->n(), 3);
}

TEST(Verdict, MinimalSpecIsSmoothable) {
  const Verdict v = smoothability_verdict(spec_preset("hm-minimal"));
  EXPECT_EQ(v.status, VerdictStatus::Smoothable);
  ASSERT_TRUE(v.eta);
  EXPECT_TRUE(v.eta->is_zero());
  EXPECT_EQ(v.filtration->n(), 1);
}

TEST(Verdict, FailingSpecIsNotImplied) {
  const Verdict v = smoothability_verdict(spec_preset("alpha-fail"));
  EXPECT_EQ(v.status, VerdictStatus::NotImplied);
  EXPECT_FALSE(v.connected);
  EXPECT_FALSE(v.alpha_ok);
  EXPECT_FALSE(v.diagnostics.empty());
}

TEST(Verdict, InvalidRawSpecCarriesRejection) {
  RawResolution r;
  r.name = "bad";
  r.g = {2, 2};
  r.a_list = {-1, 2, 2};
  r.b_list = {-2, 1};
  const Verdict v = smoothability_verdict(r);
  EXPECT_EQ(v.status, VerdictStatus::Invalid);
  ASSERT_TRUE(v.rejection);
  EXPECT_EQ(v.rejection->code, ErrorCode::EtaDisconnectedBelow);
  EXPECT_FALSE(v.spec);
}

TEST(Verdict, StatusNames) {
  EXPECT_EQ(to_string(VerdictStatus::Smoothable), "Smoothable");
  EXPECT_EQ(to_string(VerdictStatus::NotImplied), "NotImplied");
  EXPECT_EQ(to_string(VerdictStatus::Invalid), "Invalid");
}

TEST(BasicDoubleLink, MinimalSpecDegreeFive) {
  const auto z = basic_double_link(spec_preset("hm-minimal"), 5);
  EXPECT_EQ(z.a_list(), (std::vector<int>{0, 0}));
  EXPECT_EQ(z.b_list(), (std::vector<int>{-1}));
  EXPECT_EQ(z.height(), 1);
  const StepFn e = eta(z);
  EXPECT_EQ(e.eval(5), 1);
  EXPECT_EQ(e.sum(), 1);
}

TEST(BasicDoubleLink, ShiftIdentityOnExplicitSpec) {
  const auto x = spec_preset("explicitA");
  const auto z = basic_double_link(x, 28);
  EXPECT_EQ(z.height(), x.height() + 1);
  const StepFn ex = eta(x);
  const StepFn ez = eta(z);
  for (int l = ez.lo() - 2; l <= ez.hi() + 2; ++l) {
    EXPECT_EQ(ez.eval(l), ex.eval(l - 1) + (l == 28 ? 1 : 0)) << "l = " << l;
  }
}

TEST(BasicDoubleLink, InadmissibleDegreeThrows) {
  const auto x = spec_preset("explicitA");
  // s far below the support of eta leaves a gap.
  EXPECT_FALSE(try_basic_double_link(x, 0).has_value());
  try {
    basic_double_link(x, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InadmissibleDegree);
  }
}

TEST(BasicDoubleLink, WarnsBelowAPlusH) {
  const auto x = spec_preset("hm-minimal");
  EXPECT_TRUE(bdl_degree_warning(x, 4).has_value());
  EXPECT_FALSE(bdl_degree_warning(x, 5).has_value());
}

TEST(Explore, HeightZeroIsStartOnly) {
  const auto r = explore(spec_preset("hm-minimal"), {0, 5, 7});
  ASSERT_EQ(r.states.size(), 1U);
  EXPECT_EQ(r.states[0].spec, spec_preset("hm-minimal"));
}

TEST(Explore, OneStepTwoDegrees) {
  const auto r = explore(spec_preset("hm-minimal"), {1, 5, 6});
  ASSERT_EQ(r.states.size(), 3U);
  EXPECT_EQ(r.states[1].spec.height(), 1);
  EXPECT_EQ(r.states[1].status, VerdictStatus::Smoothable);
  EXPECT_EQ(r.states[2].status, VerdictStatus::Smoothable);
  ASSERT_EQ(r.per_height.size(), 2U);
  EXPECT_EQ(r.per_height[1].states, 2U);
}

TEST(Explore, DepthTwoMatchesExhaustiveEnumeration) {
  const auto start = spec_preset("hm-minimal");
  const auto r = explore(start, {2, 5, 7});
  const std::size_t expected =
      oracle::explore_classes({start.a_list(), start.b_list()}, 2, 5, 2, 5, 7);
  EXPECT_EQ(r.states.size(), expected);
}

TEST(Explore, StatesRevalidateAndReproduceVerdicts) {
  const auto r = explore(spec_preset("hm-minimal"), {3, 4, 8});
  for (const auto& s : r.states) {
    const auto again = validate_resolution(s.spec.raw());
    EXPECT_EQ(again, s.spec);
    EXPECT_EQ(smoothability_verdict(again).status, s.status);
    EXPECT_LE(s.spec.height(), 3);
  }
}

TEST(Explore, BudgetExceeded) {
  ExploreOptions o{6, 2, 12, 5};
  EXPECT_THROW(explore(spec_preset("hm-minimal"), o), Error);
}
