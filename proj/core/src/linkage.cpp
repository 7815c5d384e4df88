#include "liaison/linkage.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liaison {

std::string_view to_string(VerdictStatus status) noexcept {
  switch (status) {
    case VerdictStatus::Smoothable: return "Smoothable";
    case VerdictStatus::NotImplied: return "NotImplied";
    case VerdictStatus::Invalid: return "Invalid";
  }
  return "Unknown";
}

Verdict smoothability_verdict(const ResolutionSpec& spec, const VerdictOptions& options) {
  if (spec.mode() != ResolutionMode::Ideal) {
    throw Error(ErrorCode::NotIdealMode, "verdicts need an ideal resolution");
  }
  Verdict v;
  v.spec = spec;
  v.filtration = canonical_filtration(spec, options.tie);
  v.eta = eta(spec);
  v.pivot = options.pivot.value_or(spec.a_plus_h());
  v.theta = theta(*v.eta, v.pivot);
  v.connected = is_connected_about(*v.theta, v.pivot);
  v.alpha_ok = alpha_condition(*v.filtration);
  v.status = v.alpha_ok ? VerdictStatus::Smoothable : VerdictStatus::NotImplied;

  if (v.filtration->cancelled > 0) {
    v.diagnostics.push_back("cancelled " + std::to_string(v.filtration->cancelled) +
                            " equal-twist pair(s) before filtering");
  }
  for (std::size_t i = 0; i + 1 < v.filtration->stages.size(); ++i) {
    const auto& s = v.filtration->stages[i];
    if (s.alpha < 2) {
      v.diagnostics.push_back("alpha_" + std::to_string(s.index) + " = " +
                              std::to_string(s.alpha) + " < 2");
    }
  }
  if (!v.connected) {
    v.diagnostics.push_back("theta is not connected about " + std::to_string(v.pivot));
  }

  const bool interior_ok = interior_alpha_condition(*v.filtration);
  if (interior_ok != v.connected) {
    const std::string what = "alpha route (" + std::string(interior_ok ? "ok" : "fails") +
                             ") and theta route (" + (v.connected ? "connected" : "gap") +
                             ") disagree";
    if (options.pivot || spec.g().rank == 1) {
      v.diagnostics.push_back(what);
    } else {
      throw Error(ErrorCode::Internal, what + " for spec '" + spec.name() + "'");
    }
  }
  return v;
}

Verdict smoothability_verdict(const RawResolution& raw, const VerdictOptions& options) {
  try {
    return smoothability_verdict(validate_resolution(raw), options);
  } catch (const ValidationError& e) {
    Verdict v;
    v.status = VerdictStatus::Invalid;
    v.rejection = e.rejection();
    v.diagnostics.push_back(e.what());
    return v;
  }
}

namespace {

RawResolution linked_raw(const ResolutionSpec& spec, int s) {
  RawResolution raw = spec.raw();
  const int t = s - spec.a_plus_h();
  raw.a_list.push_back(t);
  raw.b_list.push_back(t - 1);
  raw.name = spec.name() + "+bdl(" + std::to_string(s) + ")";
  return raw;
}

void require_ideal(const ResolutionSpec& spec) {
  if (spec.mode() != ResolutionMode::Ideal) {
    throw Error(ErrorCode::NotIdealMode, "basic double links need an ideal resolution");
  }
}

}  // namespace

ResolutionSpec basic_double_link(const ResolutionSpec& spec, int s) {
  require_ideal(spec);
  try {
    return validate_resolution(linked_raw(spec, s));
  } catch (const ValidationError& e) {
    throw Error(ErrorCode::InadmissibleDegree,
                "degree " + std::to_string(s) + " is not admissible: " + e.what());
  }
}

std::optional<ResolutionSpec> try_basic_double_link(const ResolutionSpec& spec, int s) {
  require_ideal(spec);
  auto raw = linked_raw(spec, s);
  std::sort(raw.a_list.begin(), raw.a_list.end());
  std::sort(raw.b_list.begin(), raw.b_list.end());
  if (check_resolution(raw)) return std::nullopt;
  return validate_resolution(raw);
}

std::optional<std::string> bdl_degree_warning(const ResolutionSpec& spec, int s) {
  if (s < spec.a_plus_h()) {
    return "degree " + std::to_string(s) + " is below a + h = " + std::to_string(spec.a_plus_h()) +
           "; no hypersurface of that degree need contain X";
  }
  return std::nullopt;
}

ExplorationReport explore(const ResolutionSpec& start, const ExploreOptions& options) {
  require_ideal(start);
  ExplorationReport report;
  std::set<std::string> seen;

  auto class_key = [](const ResolutionSpec& spec) {
    return eta(spec).signature() + "@" + std::to_string(spec.a_plus_h());
  };
  auto add = [&](ResolutionSpec spec, std::optional<std::size_t> parent, std::optional<int> move) {
    if (report.states.size() >= options.state_cap) {
      throw Error(ErrorCode::BudgetExceeded,
                  "exploration passed " + std::to_string(options.state_cap) + " states");
    }
    const auto status = smoothability_verdict(spec).status;
    auto key = class_key(spec);
    report.states.push_back(ExploredState{std::move(spec), status, std::move(key), parent, move});
  };

  seen.insert(class_key(start));
  add(start, std::nullopt, std::nullopt);

  std::size_t level_begin = 0;
  for (int height = start.height(); height < options.max_height; ++height) {
    const std::size_t level_end = report.states.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int s = options.degree_lo; s <= options.degree_hi; ++s) {
        auto next = try_basic_double_link(report.states[i].spec, s);
        if (!next) continue;
        if (!seen.insert(class_key(*next)).second) continue;
        add(std::move(*next), i, s);
      }
    }
    level_begin = level_end;
  }

  std::map<int, HeightStats> stats;
  for (const auto& st : report.states) {
    auto& hs = stats[st.spec.height()];
    hs.height = st.spec.height();
    ++hs.states;
    if (st.status == VerdictStatus::Smoothable) ++hs.smoothable;
    if (st.status == VerdictStatus::NotImplied) ++hs.not_implied;
  }
  for (auto& [h, hs] : stats) report.per_height.push_back(hs);
  return report;
}

}  // namespace liaison
