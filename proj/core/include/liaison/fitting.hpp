#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "liaison/ff_poly.hpp"
#include "liaison/poly_matrix.hpp"
#include "liaison/random.hpp"

namespace liaison {

/// Generators of the i-th Fitting ideal: the nonzero (m - i + 1)-minors of a
/// presentation with m rows, duplicates removed, in minor order.
struct FittingIdeal {
  int index = 0;
  int minor_size = 0;
  bool unit = false;  // minor size <= 0
  std::vector<FFPoly> generators;
  bool is_zero() const noexcept { return !unit && generators.empty(); }
};

/// Fitt_i(coker u). Indices past m + 1 give the unit ideal; i < 0 throws
/// PreconditionViolated.
FittingIdeal fitting_generators(const PolyMatrix& u, int i);

/// Equality of generator sets, ignoring order.
bool same_generators(const FittingIdeal& x, const FittingIdeal& y);

using Point = std::array<std::uint32_t, kPolyVars>;

/// F_q-rational points of affine d-space, lexicographically ordered with x
/// varying slowest. Unused trailing coordinates are zero.
struct PointSet {
  int dim = 0;
  std::uint32_t q = 0;
  std::vector<Point> points;

  std::size_t size() const noexcept { return points.size(); }
  bool contains(const Point& p) const;
  bool subset_of(const PointSet& other) const;
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// Cap on the number of points or matrices a single enumeration may visit.
struct EnumerationBudget {
  std::uint64_t max_items = kDefaultEnumerationBudget;
  /// Reads LIAISON_ENUM_BUDGET when set to a positive integer.
  static EnumerationBudget from_env();
};

/// q^d as a checked product; throws BudgetExceeded above the budget.
std::uint64_t enumeration_size(std::uint32_t q, int exponent, const EnumerationBudget& budget);

/// Common zeros of `gens` in F_q^dim (dim <= 4, q = the generators' prime).
/// Throws NotPrime, FieldMismatch, DimensionMismatch or BudgetExceeded.
PointSet vanishing_points(std::span<const FFPoly> gens, std::uint32_t q, int dim,
                          const EnumerationBudget& budget = EnumerationBudget::from_env());
/// The unit ideal has no zeros.
PointSet vanishing_points(const FittingIdeal& ideal, std::uint32_t q, int dim,
                          const EnumerationBudget& budget = EnumerationBudget::from_env());

/// Support of the singular scheme of a sheaf of generic rank r: V(Fitt_{r+1}).
PointSet singular_support(const PolyMatrix& u, int rank_r, std::uint32_t q, int dim = kPolyVars,
                          const EnumerationBudget& budget = EnumerationBudget::from_env());

/// Whether f vanishes at every point of V(ideal) over F_q. This is membership
/// in the radical as seen by rational points, weaker than ideal membership.
bool vanishes_on_locus(const FFPoly& f, const FittingIdeal& ideal, std::uint32_t q, int dim,
                       const EnumerationBudget& budget = EnumerationBudget::from_env());

/// Rank of a matrix over F_p by Gaussian elimination. Entries must lie in [0, p).
int rank_mod(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p);

/// Partial derivatives of a generator list, evaluated pointwise.
class Jacobian {
 public:
  Jacobian(std::span<const FFPoly> gens, int dim);
  int rank_at(const Point& point) const;

 private:
  std::uint32_t p_ = 2;
  std::vector<std::vector<FFPoly>> partials_;  // [generator][variable]
};

/// Affine-linear entries c0 + c1 x + ... over the first `dim` variables, with
/// coefficients uniform in F_p.
PolyMatrix random_affine_matrix(std::uint32_t p, int rows, int cols, Rng& rng, int dim = kPolyVars);

struct ObvyRow {
  int i = 0;
  // Free summand: Fitt_{k+i}([u; 0_k]) and Fitt_i(u) have the same generators.
  bool generators_equal = false;
  // Quotient: V(Fitt_{k+i}(u)) is contained in V(Fitt_i([u, a])).
  std::size_t sub_points = 0;
  std::size_t super_points = 0;
  bool contained = false;
};

struct ObvyReport {
  int k = 0;
  std::uint32_t q = 0;
  PolyMatrix companion{2, 0, 0};  // the random k-column matrix a
  std::vector<ObvyRow> rows;
  bool ok() const noexcept;
};

/// Checks the behaviour of Fitting schemes under adding k free summands and
/// under a quotient by k random sections, for every i in [0, m + 1].
ObvyReport check_obvy(const PolyMatrix& u, int k, std::uint32_t q, std::uint64_t seed,
                      int dim = kPolyVars,
                      const EnumerationBudget& budget = EnumerationBudget::from_env());

/// Number of a x b matrices over F_q of each exact rank 0..a (a <= b).
std::vector<std::uint64_t> rank_histogram(int a, int b, std::uint32_t q,
                                          const EnumerationBudget& budget = EnumerationBudget::from_env());

struct RankCountResult {
  int a = 0;
  int b = 0;
  int c = 0;
  std::uint32_t q = 0;
  std::uint64_t count = 0;  // matrices of rank <= c
  std::uint64_t total = 0;  // q^(ab)
  int expected_codimension = 0;  // (a - c)(b - c)
};

/// Brute-force count of the rank <= c stratum of M_{a,b}(F_q). Requires
/// a <= b and 0 <= c <= a.
RankCountResult rank_stratum_count(int a, int b, int c, std::uint32_t q,
                                   const EnumerationBudget& budget = EnumerationBudget::from_env());

/// ab minus the growth exponent of the count between q1 and q2.
double codimension_estimate(int a, int b, int c, std::uint32_t q1, std::uint32_t q2,
                            const EnumerationBudget& budget = EnumerationBudget::from_env());

struct DeterminantalCheck {
  int a = 0;
  int b = 0;
  int c = 0;
  std::uint32_t q = 0;
  std::size_t stratum_points = 0;  // M_c
  PointSet singular;               // points of M_c where the Jacobian rank drops below the codimension
  PointSet lower_stratum;          // M_{c-1}
  bool matches() const { return singular == lower_stratum; }
};

/// Singular locus of M_c inside the generic a x b matrix (entries x, y, z, w
/// row by row, a * b <= 4, 0 <= c < a <= b), compared with M_{c-1}.
DeterminantalCheck determinantal_singular_locus(int a, int b, int c, std::uint32_t q);

}  // namespace liaison
