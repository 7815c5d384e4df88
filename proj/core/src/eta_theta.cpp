#include "liaison/eta_theta.hpp"

#include <algorithm>
#include <map>

namespace liaison {

StepFn eta_from_twists(const std::vector<int>& a_list, const std::vector<int>& b_list, int rank,
                       int a_plus_h) {
  std::map<int, std::int64_t> deltas;
  int min_key = 0;
  int max_key = 0;
  for (int b : b_list) {
    deltas[a_plus_h + b] += 1;
    min_key = std::min(min_key, b);
    max_key = std::max(max_key, b);
  }
  for (int a : a_list) {
    deltas[a_plus_h + a] -= 1;
    min_key = std::min(min_key, a);
    max_key = std::max(max_key, a);
  }
  deltas[a_plus_h] += rank - 1;
  return StepFn(std::move(deltas), a_plus_h + min_key - 1, a_plus_h + max_key + 1);
}

StepFn eta(const ResolutionSpec& spec) {
  if (spec.mode() != ResolutionMode::Ideal) {
    throw Error(ErrorCode::NotIdealMode, "eta is defined for ideal resolutions only");
  }
  return eta_from_twists(spec.a_list(), spec.b_list(), spec.g().rank, spec.a_plus_h());
}

StepFn theta(const StepFn& eta_fn, int pivot) {
  const auto support = eta_fn.support();
  if (support.empty()) return eta_fn;
  const int inf = support.front();
  if (inf >= pivot) return eta_fn;

  std::vector<std::int64_t> values = eta_fn.values();
  for (int l = inf; l < pivot; ++l) {
    if (l > eta_fn.hi()) {
      throw Error(ErrorCode::PreconditionViolated,
                  "eta vanishes at l = " + std::to_string(l) + " below the pivot");
    }
    auto& v = values[static_cast<std::size_t>(l - eta_fn.lo())];
    if (v <= 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "eta vanishes at l = " + std::to_string(l) + " below the pivot");
    }
    --v;
  }
  return StepFn::from_values(eta_fn.lo(), values);
}

bool is_connected_about(const StepFn& t, int d) {
  const auto support = t.support();
  auto split = std::lower_bound(support.begin(), support.end(), d);

  if (split != support.begin()) {
    const int first = support.front();
    const int last = *std::prev(split);
    if (last != d - 1) return false;
    if (last - first + 1 != static_cast<int>(std::distance(support.begin(), split))) return false;
  }
  if (split != support.end()) {
    const int first = *split;
    const int last = support.back();
    if (first != d) return false;
    if (last - first + 1 != static_cast<int>(std::distance(split, support.end()))) return false;
  }
  return true;
}

EtaDiagnostics validate_eta(const StepFn& eta_fn, std::int64_t h, int a_plus_h) {
  EtaDiagnostics diag;
  const auto values = eta_fn.values();
  std::optional<int> inf;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int l = eta_fn.lo() + static_cast<int>(i);
    if (values[i] < 0 && !diag.first_negative) {
      diag.nonnegative = false;
      diag.first_negative = l;
    }
    if (values[i] > 0 && !inf) inf = l;
  }
  diag.sum = eta_fn.sum();
  diag.mass_ok = diag.sum == h;
  if (inf) {
    for (int l = *inf; l < a_plus_h; ++l) {
      if (eta_fn.eval(l) <= 0) {
        diag.connected_below = false;
        diag.first_gap = l;
        break;
      }
    }
  }
  return diag;
}

std::vector<std::string> EtaDiagnostics::messages() const {
  std::vector<std::string> out;
  out.push_back(nonnegative ? "eta >= 0: ok"
                            : "eta >= 0: FAILED at l = " + std::to_string(*first_negative));
  out.push_back(std::string("sum eta = ") + std::to_string(sum) + (mass_ok ? ": ok" : ": MISMATCH"));
  out.push_back(connected_below
                    ? "eta connected below a+h: ok"
                    : "eta connected below a+h: FAILED at l = " + std::to_string(*first_gap));
  return out;
}

}  // namespace liaison
