#include "liaison/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "liaison/eta_theta.hpp"

namespace liaison {

namespace {

std::vector<int> negated_sorted(const std::vector<int>& keys) {
  std::vector<int> out;
  out.reserve(keys.size());
  for (int k : keys) out.push_back(-k);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t total(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace

RawResolution RawResolution::from_twists(std::string name, GSpec g,
                                         const std::vector<int>& e_twists,
                                         const std::vector<int>& f_twists) {
  RawResolution raw;
  raw.name = std::move(name);
  raw.g = g;
  raw.a_list = negated_sorted(e_twists);
  raw.b_list = negated_sorted(f_twists);
  return raw;
}

ValidationError::ValidationError(Rejection rejection)
    : Error(rejection.code, rejection.message), rejection_(std::move(rejection)) {}

std::vector<int> ResolutionSpec::e_twists() const { return negated_sorted(a_list_); }
std::vector<int> ResolutionSpec::f_twists() const { return negated_sorted(b_list_); }

RawResolution ResolutionSpec::raw() const {
  return RawResolution{name_, g_, a_list_, b_list_, mode_};
}

std::optional<Rejection> check_resolution(const RawResolution& raw) {
  if (raw.g.rank < 1) {
    return Rejection{ErrorCode::InvalidRank, std::nullopt,
                     "rank of G must be >= 1, got " + std::to_string(raw.g.rank)};
  }
  if (raw.mode == ResolutionMode::General) return std::nullopt;

  const auto k = raw.a_list.size();
  const auto expected = raw.b_list.size() + static_cast<std::size_t>(raw.g.rank - 1);
  if (k != expected) {
    return Rejection{ErrorCode::RankMismatch, std::nullopt,
                     "#a_list = " + std::to_string(k) + " but #b_list + r - 1 = " +
                         std::to_string(expected)};
  }
  const std::int64_t h = total(raw.a_list) - total(raw.b_list);
  if (h < 0) {
    return Rejection{ErrorCode::NegativeHeight, std::nullopt,
                     "height h = " + std::to_string(h) + " is negative"};
  }

  const StepFn e = eta_from_twists(raw.a_list, raw.b_list, raw.g.rank,
                                   raw.g.a + static_cast<int>(h));
  const auto diag = validate_eta(e, h, raw.g.a + static_cast<int>(h));
  if (diag.first_negative) {
    return Rejection{ErrorCode::EtaNegative, diag.first_negative,
                     "eta is negative at l = " + std::to_string(*diag.first_negative)};
  }
  if (diag.first_gap) {
    return Rejection{ErrorCode::EtaDisconnectedBelow, diag.first_gap,
                     "eta vanishes at l = " + std::to_string(*diag.first_gap) +
                         " below a + h = " + std::to_string(raw.g.a + h)};
  }
  return std::nullopt;
}

ResolutionSpec validate_resolution(const RawResolution& raw) {
  RawResolution sorted = raw;
  std::sort(sorted.a_list.begin(), sorted.a_list.end());
  std::sort(sorted.b_list.begin(), sorted.b_list.end());
  if (auto rejection = check_resolution(sorted)) throw ValidationError(std::move(*rejection));

  ResolutionSpec spec;
  spec.name_ = sorted.name;
  spec.g_ = sorted.g;
  spec.a_list_ = std::move(sorted.a_list);
  spec.b_list_ = std::move(sorted.b_list);
  spec.mode_ = sorted.mode;
  spec.height_ = static_cast<int>(total(spec.a_list_) - total(spec.b_list_));
  return spec;
}

MinimalPart minimal_part(const std::vector<int>& a_list, const std::vector<int>& b_list) {
  MinimalPart out;
  std::vector<int> a = a_list;
  std::vector<int> b = b_list;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.a_list.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.b_list.push_back(b[j++]);
    } else {
      ++i;
      ++j;
      ++out.cancelled;
    }
  }
  return out;
}

MinimalPart minimal_part(const ResolutionSpec& spec) {
  return minimal_part(spec.a_list(), spec.b_list());
}

}  // namespace liaison
