#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liaison/eta_theta.hpp"
#include "liaison/filtration.hpp"
#include "liaison/resolution.hpp"

namespace liaison {

enum class VerdictStatus { Smoothable, NotImplied, Invalid };

std::string_view to_string(VerdictStatus status) noexcept;

struct VerdictOptions {
  GTiePosition tie = GTiePosition::Last;
  /// Replaces a + h as the theta pivot. With an override the alpha/theta
  /// agreement is reported but not enforced.
  std::optional<int> pivot;
};

/// Smoothability decision with its witness. Status is Smoothable iff the
/// alpha condition holds; for r >= 2 this is cross-checked against theta
/// being connected about a + h and a disagreement throws ErrorCode::Internal.
struct Verdict {
  VerdictStatus status = VerdictStatus::Invalid;
  std::optional<ResolutionSpec> spec;
  std::optional<Filtration> filtration;
  std::optional<StepFn> eta;
  std::optional<StepFn> theta;
  int pivot = 0;
  bool connected = false;
  bool alpha_ok = false;
  std::optional<Rejection> rejection;
  std::vector<std::string> diagnostics;
};

Verdict smoothability_verdict(const ResolutionSpec& spec, const VerdictOptions& options = {});

/// Validates first; a rejected spec yields an Invalid verdict carrying the rejection.
Verdict smoothability_verdict(const RawResolution& raw, const VerdictOptions& options = {});

/// Z = X u (H n S) with deg S = s: a_list gains s - a - h, b_list gains
/// s - a - h - 1, height grows by one. Throws InadmissibleDegree when the
/// result does not validate.
ResolutionSpec basic_double_link(const ResolutionSpec& spec, int s);

std::optional<ResolutionSpec> try_basic_double_link(const ResolutionSpec& spec, int s);

/// Set when s < a + h, which is below the least degree a hypersurface
/// containing X can have.
std::optional<std::string> bdl_degree_warning(const ResolutionSpec& spec, int s);

struct ExploreOptions {
  int max_height = 0;
  int degree_lo = 0;
  int degree_hi = 0;
  std::size_t state_cap = 100000;
};

struct ExploredState {
  ResolutionSpec spec;
  VerdictStatus status;
  std::string signature;  // eta breakpoints and a + h
  std::optional<std::size_t> parent;
  std::optional<int> move;
};

struct HeightStats {
  int height = 0;
  std::size_t states = 0;
  std::size_t smoothable = 0;
  std::size_t not_implied = 0;
};

struct ExplorationReport {
  std::vector<ExploredState> states;  // BFS order, start first
  std::vector<HeightStats> per_height;
};

/// Breadth-first closure of `start` under admissible basic double links with
/// s in [degree_lo, degree_hi], keeping one state per (eta, a + h) class.
/// Throws BudgetExceeded past `state_cap` states.
ExplorationReport explore(const ResolutionSpec& start, const ExploreOptions& options);

}  // namespace liaison
