#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace liaison {

/// Finitely supported integer function on Z stored as a difference array:
/// f(l) = sum of delta(d) over d <= l. Deltas must sum to zero so f vanishes
/// above the window.
class StepFn {
 public:
  StepFn() = default;

  /// Deltas outside [lo, hi] or not summing to zero are rejected.
  StepFn(std::map<int, std::int64_t> deltas, int lo, int hi);

  /// Values f(lo), f(lo+1), ..., f(lo + values.size() - 1); zero elsewhere.
  static StepFn from_values(int lo, const std::vector<std::int64_t>& values);

  std::int64_t eval(int l) const;
  /// Sum of f(l) over all l.
  std::int64_t sum() const;
  /// Degrees with f(l) > 0, ascending.
  std::vector<int> support() const;
  /// Values over the window, lo..hi inclusive.
  std::vector<std::int64_t> values() const;

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  bool is_zero() const noexcept { return deltas_.empty(); }
  const std::map<int, std::int64_t>& deltas() const noexcept { return deltas_; }

  /// g(l) = f(l - k).
  StepFn shifted(int k) const;
  /// Pointwise sum; the window is the union hull.
  StepFn operator+(const StepFn& other) const;

  /// Canonical text form of the breakpoints, e.g. "5:+1,6:-1". Equal functions
  /// produce equal signatures regardless of window.
  std::string signature() const;

  /// Functions compare equal iff they agree at every l (windows may differ).
  friend bool operator==(const StepFn& a, const StepFn& b) { return a.deltas_ == b.deltas_; }

 private:
  std::map<int, std::int64_t> deltas_;  // no zero entries
  int lo_ = 0;
  int hi_ = 0;
};

}  // namespace liaison
