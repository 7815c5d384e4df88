#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/resolution.hpp"
#include "liaison/step_function.hpp"

namespace liaison {

/// eta(l) = #{j : b_j <= l - a - h} - #{i : a_i <= l - a - h} + (r - 1)[l >= a + h],
/// on the window [a+h + min key - 1, a+h + max key + 1] (keys include G's 0).
/// Requires #a_list = #b_list + r - 1 so that the deltas cancel.
StepFn eta_from_twists(const std::vector<int>& a_list, const std::vector<int>& b_list, int rank,
                       int a_plus_h);

/// Throws NotIdealMode for general-mode specs.
StepFn eta(const ResolutionSpec& spec);

/// theta = eta - 1 on [inf eta, pivot), eta elsewhere; identically zero when eta is.
/// Throws PreconditionViolated if that would make theta negative.
StepFn theta(const StepFn& eta_fn, int pivot);

/// Support S = {l : t(l) > 0} is connected about d when the part of S below d
/// is empty or an interval ending at d - 1, and the part at or above d is empty
/// or an interval starting at d.
bool is_connected_about(const StepFn& t, int d);

struct EtaDiagnostics {
  bool nonnegative = true;
  std::optional<int> first_negative;
  std::int64_t sum = 0;
  bool mass_ok = true;
  /// eta(l) > 0 for inf eta <= l < a + h.
  bool connected_below = true;
  std::optional<int> first_gap;

  bool ok() const noexcept { return nonnegative && mass_ok && connected_below; }
  std::vector<std::string> messages() const;
};

EtaDiagnostics validate_eta(const StepFn& eta_fn, std::int64_t h, int a_plus_h);

}  // namespace liaison
