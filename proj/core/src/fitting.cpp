#include "liaison/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

#include "liaison/error.hpp"

namespace liaison {

namespace {

std::uint32_t inverse_mod(std::uint32_t v, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = v % p;
  for (std::uint32_t e = p - 2; e; e >>= 1U) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
}

// Advances `point` through F_q^dim in lexicographic order; false after the last point.
bool next_point(Point& point, std::uint32_t q, int dim) {
  for (int v = dim - 1; v >= 0; --v) {
    auto& coord = point[static_cast<std::size_t>(v)];
    if (++coord < q) return true;
    coord = 0;
  }
  return false;
}

PolyMatrix generic_matrix(int a, int b, std::uint32_t q) {
  PolyMatrix m(q, a, b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) m.set(i, j, FFPoly::variable(q, i * b + j));
  }
  return m;
}

}  // namespace

FittingIdeal fitting_generators(const PolyMatrix& u, int i) {
  if (i < 0) throw Error(ErrorCode::PreconditionViolated, "Fitting index must be nonnegative");
  FittingIdeal ideal;
  ideal.index = i;
  ideal.minor_size = u.rows() - i + 1;
  if (ideal.minor_size <= 0) {
    ideal.unit = true;
    return ideal;
  }
  if (ideal.minor_size > std::min(u.rows(), u.cols())) return ideal;
  std::set<FFPoly> seen;
  for (auto& minor : u.minors(ideal.minor_size)) {
    if (minor.is_zero() || !seen.insert(minor).second) continue;
    ideal.generators.push_back(std::move(minor));
  }
  return ideal;
}

bool same_generators(const FittingIdeal& x, const FittingIdeal& y) {
  if (x.unit || y.unit) return x.unit == y.unit;
  const std::set<FFPoly> xs(x.generators.begin(), x.generators.end());
  const std::set<FFPoly> ys(y.generators.begin(), y.generators.end());
  return xs == ys;
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

bool PointSet::subset_of(const PointSet& other) const {
  return std::includes(other.points.begin(), other.points.end(), points.begin(), points.end());
}

EnumerationBudget EnumerationBudget::from_env() {
  EnumerationBudget budget;
  if (const char* raw = std::getenv("LIAISON_ENUM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) budget.max_items = v;
  }
  return budget;
}

std::uint64_t enumeration_size(std::uint32_t q, int exponent, const EnumerationBudget& budget) {
  std::uint64_t size = 1;
  for (int i = 0; i < exponent; ++i) {
    if (size > budget.max_items / q) {
      throw Error(ErrorCode::BudgetExceeded,
                  std::to_string(q) + "^" + std::to_string(exponent) + " items exceed the budget of " +
                      std::to_string(budget.max_items) + " (LIAISON_ENUM_BUDGET)");
    }
    size *= q;
  }
  return size;
}

PointSet vanishing_points(std::span<const FFPoly> gens, std::uint32_t q, int dim,
                          const EnumerationBudget& budget) {
  require_prime(q);
  if (dim < 1 || dim > kPolyVars) {
    throw Error(ErrorCode::DimensionMismatch, "ambient dimension must lie in [1, 4]");
  }
  for (const auto& g : gens) {
    if (g.prime() != q) {
      throw Error(ErrorCode::FieldMismatch, "generator over F_" + std::to_string(g.prime()) +
                                                " enumerated over F_" + std::to_string(q));
    }
    if (g.variables_used() > dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator " + g.to_string() + " uses variables beyond dimension " + std::to_string(dim));
    }
  }
  enumeration_size(q, dim, budget);

  PointSet out{dim, q, {}};
  Point point{};
  do {
    const bool zero = std::all_of(gens.begin(), gens.end(),
                                  [&](const FFPoly& g) { return g.eval(point) == 0; });
    if (zero) out.points.push_back(point);
  } while (next_point(point, q, dim));
  return out;
}

PointSet vanishing_points(const FittingIdeal& ideal, std::uint32_t q, int dim,
                          const EnumerationBudget& budget) {
  if (ideal.unit) {
    require_prime(q);
    if (dim < 1 || dim > kPolyVars) {
      throw Error(ErrorCode::DimensionMismatch, "ambient dimension must lie in [1, 4]");
    }
    return PointSet{dim, q, {}};
  }
  return vanishing_points(ideal.generators, q, dim, budget);
}

PointSet singular_support(const PolyMatrix& u, int rank_r, std::uint32_t q, int dim,
                          const EnumerationBudget& budget) {
  if (rank_r < 0) throw Error(ErrorCode::PreconditionViolated, "generic rank must be nonnegative");
  return vanishing_points(fitting_generators(u, rank_r + 1), q, dim, budget);
}

bool vanishes_on_locus(const FFPoly& f, const FittingIdeal& ideal, std::uint32_t q, int dim,
                       const EnumerationBudget& budget) {
  const PointSet locus = vanishing_points(ideal, q, dim, budget);
  return std::all_of(locus.points.begin(), locus.points.end(),
                     [&](const Point& p) { return f.eval(p) == 0; });
}

int rank_mod(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && m[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[pivot_row]);
    const std::uint64_t inv = inverse_mod(m[pivot_row][c], p);
    for (std::size_t k = pivot_row + 1; k < rows; ++k) {
      if (m[k][c] == 0) continue;
      const std::uint64_t factor = m[k][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = factor * m[pivot_row][j] % p;
        m[k][j] = static_cast<std::uint32_t>((m[k][j] + p - sub) % p);
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

Jacobian::Jacobian(std::span<const FFPoly> gens, int dim) {
  if (!gens.empty()) p_ = gens.front().prime();
  partials_.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<FFPoly> row;
    row.reserve(static_cast<std::size_t>(dim));
    for (int v = 0; v < dim; ++v) row.push_back(g.derivative(v));
    partials_.push_back(std::move(row));
  }
}

int Jacobian::rank_at(const Point& point) const {
  std::vector<std::vector<std::uint32_t>> values;
  values.reserve(partials_.size());
  for (const auto& row : partials_) {
    std::vector<std::uint32_t> vals;
    vals.reserve(row.size());
    for (const auto& d : row) vals.push_back(d.eval(point));
    values.push_back(std::move(vals));
  }
  return rank_mod(std::move(values), p_);
}

PolyMatrix random_affine_matrix(std::uint32_t p, int rows, int cols, Rng& rng, int dim) {
  PolyMatrix out(p, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      FFPoly entry = FFPoly::constant(p, static_cast<std::int64_t>(rng.below(p)));
      for (int v = 0; v < dim; ++v) {
        entry += FFPoly::variable(p, v).scaled(static_cast<std::int64_t>(rng.below(p)));
      }
      out.set(i, j, std::move(entry));
    }
  }
  return out;
}

bool ObvyReport::ok() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ObvyRow& r) { return r.generators_equal && r.contained; });
}

ObvyReport check_obvy(const PolyMatrix& u, int k, std::uint32_t q, std::uint64_t seed, int dim,
                      const EnumerationBudget& budget) {
  if (k < 0) throw Error(ErrorCode::PreconditionViolated, "k must be nonnegative");
  if (u.prime() != q) throw Error(ErrorCode::FieldMismatch, "matrix prime differs from q");
  Rng rng(seed);
  ObvyReport report;
  report.k = k;
  report.q = q;
  report.companion = random_affine_matrix(q, u.rows(), k, rng, dim);
  const PolyMatrix padded = u.with_zero_rows(k);
  const PolyMatrix quotient = u.hconcat(report.companion);

  for (int i = 0; i <= u.rows() + 1; ++i) {
    ObvyRow row;
    row.i = i;
    row.generators_equal =
        same_generators(fitting_generators(padded, k + i), fitting_generators(u, i));
    const PointSet sub = vanishing_points(fitting_generators(u, k + i), q, dim, budget);
    const PointSet super = vanishing_points(fitting_generators(quotient, i), q, dim, budget);
    row.sub_points = sub.size();
    row.super_points = super.size();
    row.contained = sub.subset_of(super);
    report.rows.push_back(row);
  }
  return report;
}

std::vector<std::uint64_t> rank_histogram(int a, int b, std::uint32_t q,
                                          const EnumerationBudget& budget) {
  require_prime(q);
  if (a < 0 || b < a) throw Error(ErrorCode::PreconditionViolated, "need 0 <= a <= b");
  const std::uint64_t total = enumeration_size(q, a * b, budget);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(a) + 1, 0);
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(a * b), 0);
  std::vector<std::vector<std::uint32_t>> m(static_cast<std::size_t>(a),
                                            std::vector<std::uint32_t>(static_cast<std::size_t>(b)));
  for (std::uint64_t n = 0; n < total; ++n) {
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            digits[static_cast<std::size_t>(i * b + j)];
      }
    }
    ++hist[static_cast<std::size_t>(rank_mod(m, q))];
    for (auto& d : digits) {
      if (++d < q) break;
      d = 0;
    }
  }
  return hist;
}

RankCountResult rank_stratum_count(int a, int b, int c, std::uint32_t q,
                                   const EnumerationBudget& budget) {
  if (c < 0 || c > a) throw Error(ErrorCode::PreconditionViolated, "need 0 <= c <= a");
  const auto hist = rank_histogram(a, b, q, budget);
  RankCountResult result{a, b, c, q, 0, 0, (a - c) * (b - c)};
  for (std::size_t r = 0; r < hist.size(); ++r) {
    result.total += hist[r];
    if (static_cast<int>(r) <= c) result.count += hist[r];
  }
  return result;
}

double codimension_estimate(int a, int b, int c, std::uint32_t q1, std::uint32_t q2,
                            const EnumerationBudget& budget) {
  if (q1 == q2) throw Error(ErrorCode::PreconditionViolated, "need two distinct primes");
  const auto n1 = static_cast<double>(rank_stratum_count(a, b, c, q1, budget).count);
  const auto n2 = static_cast<double>(rank_stratum_count(a, b, c, q2, budget).count);
  return a * b - std::log(n2 / n1) / std::log(static_cast<double>(q2) / q1);
}

DeterminantalCheck determinantal_singular_locus(int a, int b, int c, std::uint32_t q) {
  if (a < 1 || b < a || a * b > kPolyVars || c < 0 || c >= a) {
    throw Error(ErrorCode::PreconditionViolated, "need 0 <= c < a <= b and a * b <= 4");
  }
  require_prime(q);
  const int dim = a * b;
  const PolyMatrix m = generic_matrix(a, b, q);
  const auto stratum_gens = m.minors(c + 1);
  const int codim = (a - c) * (b - c);

  DeterminantalCheck check{a, b, c, q, 0, PointSet{dim, q, {}}, PointSet{dim, q, {}}};
  const PointSet stratum = vanishing_points(stratum_gens, q, dim);
  check.stratum_points = stratum.size();
  const Jacobian jac(stratum_gens, dim);
  for (const auto& p : stratum.points) {
    if (jac.rank_at(p) < codim) check.singular.points.push_back(p);
  }
  if (c > 0) check.lower_stratum = vanishing_points(m.minors(c), q, dim);
  return check;
}

}  // namespace liaison
