#include "liaison/probe.hpp"

#include "liaison/error.hpp"
#include "parallel.hpp"

namespace liaison {

std::string_view to_string(CompanionKind kind) noexcept {
  switch (kind) {
    case CompanionKind::Random: return "random";
    case CompanionKind::Structured: return "structured";
  }
  return "?";
}

std::string_view to_string(ProbeOutcome outcome) noexcept {
  switch (outcome) {
    case ProbeOutcome::Pass: return "pass";
    case ProbeOutcome::Singular: return "singular";
    case ProbeOutcome::NotCodim2: return "not-codim-2";
  }
  return "?";
}

namespace {

FFPoly affine_in(std::uint32_t p, std::initializer_list<int> vars, Rng& rng) {
  FFPoly out = FFPoly::constant(p, static_cast<std::int64_t>(rng.below(p)));
  for (int v : vars) out += FFPoly::variable(p, v).scaled(static_cast<std::int64_t>(rng.below(p)));
  return out;
}

}  // namespace

PolyMatrix draw_companion(const PolyMatrix& u, CompanionKind kind, Rng& rng) {
  const std::uint32_t p = u.prime();
  const int rows = u.rows();
  const int cols = rows - 2;
  if (kind == CompanionKind::Random) return random_affine_matrix(p, rows, cols, rng);

  // Rows 0..2 of the first column carry b, c, d; the last cols - 1 rows hold
  // an identity block in the remaining columns.
  PolyMatrix a(p, rows, cols);
  a.set(0, 0, affine_in(p, {2, 3}, rng));
  a.set(1, 0, affine_in(p, {2, 3}, rng));
  a.set(2, 0, FFPoly::constant(p, static_cast<std::int64_t>(1 + rng.below(p - 1))));
  for (int j = 1; j < cols; ++j) a.set(2 + j, j, FFPoly::constant(p, 1));
  return a;
}

ProbeTrial probe_companion(const PolyMatrix& u, const PolyMatrix& a, const EnumerationBudget& budget) {
  const PolyMatrix full = u.hconcat(a);
  const int size = std::min(full.rows(), full.cols());
  std::vector<FFPoly> gens;
  for (auto& m : full.minors(size)) {
    if (!m.is_zero()) gens.push_back(std::move(m));
  }

  ProbeTrial trial;
  if (gens.empty()) {
    trial.outcome = ProbeOutcome::NotCodim2;
    return trial;
  }
  const PointSet locus = vanishing_points(gens, u.prime(), kPolyVars, budget);
  const Jacobian jac(gens, kPolyVars);
  trial.locus_points = locus.size();
  for (const auto& point : locus.points) {
    const int rank = jac.rank_at(point);
    if (rank < 2) ++trial.low_rank_points;
    if (rank > 2) ++trial.high_rank_points;
  }
  if (trial.high_rank_points > 0) {
    trial.outcome = ProbeOutcome::NotCodim2;
  } else if (trial.low_rank_points > 0) {
    trial.outcome = ProbeOutcome::Singular;
  }
  return trial;
}

ProbeReport smoothness_probe(const PolyMatrix& u, std::uint32_t q, std::size_t trials,
                             std::uint64_t seed, CompanionKind kind, unsigned workers,
                             const EnumerationBudget& budget) {
  if (u.prime() != q) throw Error(ErrorCode::FieldMismatch, "matrix prime differs from q");
  if (q > 5) throw Error(ErrorCode::PreconditionViolated, "the probe supports q <= 5");
  if (u.cols() != 1 || u.rows() < 3) {
    throw Error(ErrorCode::DimensionMismatch, "probe needs a column presentation with at least 3 rows");
  }
  enumeration_size(q, kPolyVars, budget);

  ProbeReport report;
  report.q = q;
  report.trials = trials;
  report.seed = seed;
  report.kind = kind;
  report.per_trial = detail::parallel_map<ProbeTrial>(trials, workers, [&](std::size_t i) {
    Rng rng(trial_seed(seed, i));
    ProbeTrial t = probe_companion(u, draw_companion(u, kind, rng), budget);
    t.index = i;
    return t;
  });
  for (const auto& t : report.per_trial) {
    switch (t.outcome) {
      case ProbeOutcome::Pass: ++report.passes; break;
      case ProbeOutcome::Singular: ++report.singular; break;
      case ProbeOutcome::NotCodim2: ++report.not_codim2; break;
    }
  }
  return report;
}

}  // namespace liaison
