#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "liaison/fitting.hpp"
#include "liaison/poly_matrix.hpp"
#include "liaison/random.hpp"

namespace liaison {

enum class CompanionKind {
  /// Every entry affine-linear in x, y, z, w with uniform coefficients.
  Random,
  /// Column 1 is (b, c, d, 0) with b, c affine-linear in z, w and d a nonzero
  /// constant; column 2 is the unit vector on the last row. The maximal
  /// minors then cut out (dx - bz, dy - cz).
  Structured,
};

enum class ProbeOutcome {
  Pass,
  /// Some rational point of the locus has Jacobian rank below 2.
  Singular,
  /// The locus is all of A^4, or the Jacobian rank exceeds 2 somewhere.
  NotCodim2,
};

std::string_view to_string(CompanionKind kind) noexcept;
std::string_view to_string(ProbeOutcome outcome) noexcept;

struct ProbeTrial {
  std::size_t index = 0;
  ProbeOutcome outcome = ProbeOutcome::Pass;
  std::size_t locus_points = 0;
  std::size_t low_rank_points = 0;   // Jacobian rank < 2
  std::size_t high_rank_points = 0;  // Jacobian rank > 2
};

struct ProbeReport {
  std::uint32_t q = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  CompanionKind kind = CompanionKind::Random;
  std::size_t passes = 0;
  std::size_t singular = 0;
  std::size_t not_codim2 = 0;
  std::vector<ProbeTrial> per_trial;
  double pass_fraction() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(passes) / static_cast<double>(trials);
  }
};

/// Companion for a column presentation with r + 1 rows: (r + 1) x (r - 1).
PolyMatrix draw_companion(const PolyMatrix& u, CompanionKind kind, Rng& rng);

/// Checks that V(maximal minors of [u, a]) has Jacobian rank exactly 2 at
/// every F_p-rational point of A^4.
ProbeTrial probe_companion(const PolyMatrix& u, const PolyMatrix& a,
                           const EnumerationBudget& budget = EnumerationBudget::from_env());

/// Monte-Carlo smoothness probe for a column presentation u with r + 1 >= 3
/// rows over F_q, q <= 5. Trial i draws its companion from trial_seed(seed, i),
/// so results do not depend on `workers`.
ProbeReport smoothness_probe(const PolyMatrix& u, std::uint32_t q, std::size_t trials,
                             std::uint64_t seed, CompanionKind kind = CompanionKind::Random,
                             unsigned workers = 1,
                             const EnumerationBudget& budget = EnumerationBudget::from_env());

}  // namespace liaison
