#include <gtest/gtest.h>

#include "liaison/error.hpp"
#include "liaison/eta_theta.hpp"
#include "liaison/filtration.hpp"
#include "liaison/presets.hpp"

using namespace liaison;

TEST(Filtration, ExplicitStages) {
  const Filtration f = canonical_filtration(spec_preset("explicitA"));
  ASSERT_EQ(f.n(), 3);
  EXPECT_EQ(f.stages[0].m, 3);
  EXPECT_EQ(f.stages[0].r, 1);
  EXPECT_EQ(f.stages[0].alpha, 2);
  EXPECT_FALSE(f.stages[0].includes_g);
  EXPECT_EQ(f.stages[1].m, 6);
  EXPECT_EQ(f.stages[1].r, 4);
  EXPECT_EQ(f.stages[1].rank_f, 7);
  EXPECT_EQ(f.stages[1].alpha, 3);
  EXPECT_TRUE(f.stages[1].includes_g);
  EXPECT_EQ(f.final_alpha, 1);
  EXPECT_EQ(f.cancelled, 0);
  EXPECT_TRUE(alpha_condition(f));
}

TEST(Filtration, StagesStrictlyIncrease) {
  const Filtration f = canonical_filtration(spec_preset("explicitA"));
  for (std::size_t i = 1; i < f.stages.size(); ++i) {
    EXPECT_LT(f.stages[i - 1].m, f.stages[i].m);
    EXPECT_LE(f.stages[i - 1].r, f.stages[i].r);
  }
  EXPECT_EQ(f.stages.back().r, static_cast<int>(f.a_list.size()));
}

TEST(Filtration, MinimalSpecHasOneStage) {
  const Filtration f = canonical_filtration(spec_preset("hm-minimal"));
  EXPECT_EQ(f.n(), 1);
  EXPECT_EQ(f.final_alpha, 1);
  EXPECT_TRUE(alpha_condition(f));
}

TEST(Filtration, FailingSpec) {
  const Filtration f = canonical_filtration(spec_preset("alpha-fail"));
  ASSERT_GE(f.n(), 2);
  EXPECT_EQ(f.stages[0].alpha, 1);
  EXPECT_FALSE(interior_alpha_condition(f));
  EXPECT_FALSE(alpha_condition(f));
}

TEST(Filtration, TiePositionDoesNotChangeAlphas) {
  const auto spec = spec_preset("explicitA");
  const Filtration last = canonical_filtration(spec, GTiePosition::Last);
  const Filtration first = canonical_filtration(spec, GTiePosition::First);
  ASSERT_EQ(last.n(), first.n());
  for (int i = 0; i < last.n(); ++i) {
    EXPECT_EQ(last.stages[static_cast<std::size_t>(i)].alpha, first.stages[static_cast<std::size_t>(i)].alpha);
  }
}

TEST(Filtration, LocalMinimaOnExplicitSpec) {
  const auto spec = spec_preset("explicitA");
  const Filtration f = canonical_filtration(spec);
  const auto mins = local_minima(f, eta(spec), spec.a_plus_h());
  ASSERT_EQ(mins.size(), 2U);
  for (const auto& m : mins) EXPECT_TRUE(m.matches()) << "stage " << m.stage;
  // a_1 = -3 < 0: eta(25) = alpha_1 = 2.
  EXPECT_EQ(mins[0].degree, 25);
  EXPECT_EQ(mins[0].actual, 2);
}

TEST(Filtration, DegenerateInteriorStageThrows) {
  // A summand of E outranks every F slot below it.
  EXPECT_THROW(filtration_from_twists({-5, -5, 0}, {-5}, 2), Error);
}
