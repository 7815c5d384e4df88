#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liaison/error.hpp"

namespace liaison {

/// The sheaf G of the minimal sequence 0 -> O^(r-1) -> G -> I_X0(a) -> 0.
/// G always occupies a single slot with twist key 0 among the summands of F.
struct GSpec {
  int rank = 1;
  int a = 0;

  friend bool operator==(const GSpec&, const GSpec&) = default;
};

enum class ResolutionMode {
  /// 0 -> E -> F -> I_X(a+h) -> 0; rank F - rank E = 1 and eta must be realizable.
  Ideal,
  /// Arbitrary map E -> F; only sorting is enforced. Usable for filtrations, not verdicts.
  General,
};

/// Unvalidated twist data. `a_list` / `b_list` use the O(-a_i), O(-b_j)
/// convention: a summand O(t) has key -t.
struct RawResolution {
  std::string name;
  GSpec g;
  std::vector<int> a_list;
  std::vector<int> b_list;
  ResolutionMode mode = ResolutionMode::Ideal;

  /// Builds from human twists t of O(t) summands of E and F (G excluded).
  static RawResolution from_twists(std::string name, GSpec g, const std::vector<int>& e_twists,
                                   const std::vector<int>& f_twists);
};

struct Rejection {
  ErrorCode code;
  std::optional<int> degree;  // offending degree l for the eta checks
  std::string message;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(Rejection rejection);
  const Rejection& rejection() const noexcept { return rejection_; }

 private:
  Rejection rejection_;
};

/// Validated resolution twist data. Only `validate_resolution` constructs one,
/// so every instance has sorted lists, h >= 0 and (in ideal mode) a
/// nonnegative eta that is connected below a + h.
class ResolutionSpec {
 public:
  const std::string& name() const noexcept { return name_; }
  const GSpec& g() const noexcept { return g_; }
  const std::vector<int>& a_list() const noexcept { return a_list_; }
  const std::vector<int>& b_list() const noexcept { return b_list_; }
  ResolutionMode mode() const noexcept { return mode_; }
  /// Height h = sum a_i - sum b_j.
  int height() const noexcept { return height_; }
  int a_plus_h() const noexcept { return g_.a + height_; }

  /// Twists t of O(t) for E and F, ascending in t.
  std::vector<int> e_twists() const;
  std::vector<int> f_twists() const;

  RawResolution raw() const;

  /// Same twist data and G; the name is a label and does not participate.
  friend bool operator==(const ResolutionSpec& x, const ResolutionSpec& y) {
    return x.g_ == y.g_ && x.a_list_ == y.a_list_ && x.b_list_ == y.b_list_ && x.mode_ == y.mode_;
  }

 private:
  friend ResolutionSpec validate_resolution(const RawResolution&);
  ResolutionSpec() = default;

  std::string name_;
  GSpec g_;
  std::vector<int> a_list_;
  std::vector<int> b_list_;
  ResolutionMode mode_ = ResolutionMode::Ideal;
  int height_ = 0;
};

/// First violated invariant, or nullopt if the data would validate.
std::optional<Rejection> check_resolution(const RawResolution& raw);

/// Sorts, computes the height and enforces realizability. Throws ValidationError.
ResolutionSpec validate_resolution(const RawResolution& raw);

/// Twist data after cancelling equal keys a_i = b_j pairwise. A general map has
/// a unit entry between such summands, so they split off without changing the
/// cokernel.
struct MinimalPart {
  std::vector<int> a_list;
  std::vector<int> b_list;
  int cancelled = 0;
};

MinimalPart minimal_part(const std::vector<int>& a_list, const std::vector<int>& b_list);
MinimalPart minimal_part(const ResolutionSpec& spec);

}  // namespace liaison
