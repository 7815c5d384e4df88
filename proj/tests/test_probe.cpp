#include <gtest/gtest.h>

#include "liaison/error.hpp"
#include "liaison/presets.hpp"
#include "liaison/probe.hpp"

using namespace liaison;

TEST(Probe, StructuredCompanionsAlwaysPass) {
  const auto u = matrix_preset("line-xyz", 3);
  const auto r = smoothness_probe(u, 3, 100, 11, CompanionKind::Structured);
  EXPECT_EQ(r.passes, 100U);
  EXPECT_DOUBLE_EQ(r.pass_fraction(), 1.0);
}

TEST(Probe, StructuredCompanionShape) {
  const auto u = matrix_preset("line-xyz", 5);
  Rng rng(2);
  const auto a = draw_companion(u, CompanionKind::Structured, rng);
  EXPECT_EQ(a.rows(), 4);
  EXPECT_EQ(a.cols(), 2);
  EXPECT_EQ(a.at(3, 1), FFPoly::constant(5, 1));
  EXPECT_TRUE(a.at(2, 0).is_constant());
  EXPECT_FALSE(a.at(2, 0).is_zero());
}

TEST(Probe, ZeroCompanionIsNotCodim2) {
  const auto u = matrix_preset("line-xyz", 3);
  const auto t = probe_companion(u, PolyMatrix(3, 4, 2));
  EXPECT_EQ(t.outcome, ProbeOutcome::NotCodim2);
}

TEST(Probe, KnownSmoothCompanion) {
  // (dx - bz, dy - cz) with d = 1, b = z, c = w.
  const auto u = matrix_preset("line-xyz", 3);
  const auto a = PolyMatrix::parse("z, 0\nw, 0\n1, 0\n0, 1\n", 3);
  const auto t = probe_companion(u, a);
  EXPECT_EQ(t.outcome, ProbeOutcome::Pass);
  EXPECT_EQ(t.locus_points, 9U);
}

TEST(Probe, ReproducibleAndWorkerIndependent) {
  const auto u = matrix_preset("line-xyz", 3);
  const auto a = smoothness_probe(u, 3, 60, 5, CompanionKind::Random, 1);
  const auto b = smoothness_probe(u, 3, 60, 5, CompanionKind::Random, 3);
  EXPECT_EQ(a.passes, b.passes);
  ASSERT_EQ(a.per_trial.size(), b.per_trial.size());
  for (std::size_t i = 0; i < a.per_trial.size(); ++i) {
    EXPECT_EQ(a.per_trial[i].outcome, b.per_trial[i].outcome);
    EXPECT_EQ(a.per_trial[i].locus_points, b.per_trial[i].locus_points);
  }
  EXPECT_EQ(a.passes + a.singular + a.not_codim2, 60U);
}

TEST(Probe, Preconditions) {
  const auto u = matrix_preset("line-xyz", 7);
  EXPECT_THROW(smoothness_probe(u, 7, 1, 1), Error);
  EXPECT_THROW(smoothness_probe(matrix_preset("line-xyz", 3), 5, 1, 1), Error);
  EXPECT_THROW(smoothness_probe(PolyMatrix::parse("x, y\nz, w", 3), 3, 1, 1), Error);
}
