#include <gtest/gtest.h>

#include "liaison/error.hpp"
#include "liaison/eta_theta.hpp"
#include "liaison/presets.hpp"
#include "oracles.hpp"

using namespace liaison;

TEST(Eta, ExplicitValuesMatchNaiveCounting) {
  const auto spec = spec_preset("explicitA");
  const StepFn e = eta(spec);
  const std::vector<std::int64_t> expected{1, 3, 2, 2, 4, 3, 2, 2, 3, 1};
  for (int l = 23; l <= 32; ++l) {
    EXPECT_EQ(e.eval(l), expected[static_cast<std::size_t>(l - 23)]) << "l = " << l;
    EXPECT_EQ(e.eval(l), oracle::eta_at(spec.a_list(), spec.b_list(), 2, 28, l));
  }
  EXPECT_EQ(e.eval(22), 0);
  EXPECT_EQ(e.eval(33), 0);
  EXPECT_EQ(e.sum(), 23);
}

TEST(Eta, MinimalSpecIsZero) {
  const StepFn e = eta(spec_preset("hm-minimal"));
  EXPECT_TRUE(e.is_zero());
  EXPECT_EQ(e.sum(), 0);
}

TEST(Eta, GeneralModeIsRejected) {
  RawResolution r;
  r.g = {2, 1};
  r.a_list = {1};
  r.mode = ResolutionMode::General;
  EXPECT_THROW(eta(validate_resolution(r)), Error);
}

TEST(Theta, ExplicitValues) {
  const auto spec = spec_preset("explicitA");
  const StepFn t = theta(eta(spec), spec.a_plus_h());
  const std::vector<std::int64_t> expected{0, 2, 1, 1, 3, 3, 2, 2, 3, 1};
  for (int l = 23; l <= 32; ++l) EXPECT_EQ(t.eval(l), expected[static_cast<std::size_t>(l - 23)]);
  EXPECT_TRUE(is_connected_about(t, 28));
}

TEST(Theta, ZeroEtaGivesZeroTheta) {
  EXPECT_TRUE(theta(StepFn{}, 5).is_zero());
  EXPECT_TRUE(is_connected_about(StepFn{}, 5));
}

TEST(Theta, FailingSpecHasGap) {
  const auto spec = spec_preset("alpha-fail");
  const StepFn e = eta(spec);
  EXPECT_EQ(e.values().size() > 0, true);
  EXPECT_EQ(e.eval(7), 2);
  EXPECT_EQ(e.eval(8), 1);
  EXPECT_EQ(e.eval(9), 2);
  EXPECT_EQ(e.eval(10), 2);
  const StepFn t = theta(e, spec.a_plus_h());
  EXPECT_EQ(t.support(), (std::vector<int>{7, 9, 10}));
  EXPECT_FALSE(is_connected_about(t, 9));
}

TEST(Theta, NegativeResultIsAPreconditionViolation) {
  // eta = (1, 0, 1) would make theta negative in the middle.
  EXPECT_THROW(theta(StepFn::from_values(0, {1, 0, 1}), 3), Error);
}

TEST(ConnectedAbout, SmallCases) {
  auto support = [](std::vector<int> s) {
    std::vector<std::int64_t> vals(12, 0);
    for (int l : s) vals[static_cast<std::size_t>(l)] = 1;
    return StepFn::from_values(0, vals);
  };
  EXPECT_TRUE(is_connected_about(support({3, 4, 5}), 4));
  EXPECT_TRUE(is_connected_about(support({2, 3}), 4));
  EXPECT_TRUE(is_connected_about(support({4, 5}), 4));
  // A zero at d itself separates the two halves.
  EXPECT_FALSE(is_connected_about(support({3, 5}), 4));
  EXPECT_FALSE(is_connected_about(support({1, 3}), 4));
  EXPECT_FALSE(is_connected_about(support({5, 6}), 4));
  EXPECT_FALSE(is_connected_about(support({4, 6}), 4));
}

TEST(ConnectedAbout, AgreesWithSetOracle) {
  for (unsigned mask = 0; mask < (1U << 9); ++mask) {
    std::vector<std::int64_t> vals(9, 0);
    std::set<int> s;
    for (int l = 0; l < 9; ++l) {
      if (mask & (1U << l)) {
        vals[static_cast<std::size_t>(l)] = 1;
        s.insert(l);
      }
    }
    const StepFn f = StepFn::from_values(0, vals);
    for (int d = -1; d <= 10; ++d) {
      EXPECT_EQ(is_connected_about(f, d), oracle::connected_about(s, d)) << mask << " about " << d;
    }
  }
}

TEST(EtaDiagnostics, ReportsEachCheck) {
  const auto spec = spec_preset("explicitA");
  const auto ok = validate_eta(eta(spec), 23, 28);
  EXPECT_TRUE(ok.ok());
  EXPECT_EQ(ok.sum, 23);

  const auto zero = validate_eta(StepFn{}, 0, 5);
  EXPECT_TRUE(zero.ok());

  const auto gap = validate_eta(StepFn::from_values(0, {1, 0, 1}), 2, 5);
  EXPECT_FALSE(gap.connected_below);
  ASSERT_TRUE(gap.first_gap);
  EXPECT_EQ(*gap.first_gap, 1);
  EXPECT_FALSE(gap.messages().empty());

  const auto mass = validate_eta(StepFn::from_values(0, {1}), 2, 5);
  EXPECT_FALSE(mass.mass_ok);
}
