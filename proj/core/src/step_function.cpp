#include "liaison/step_function.hpp"

#include <algorithm>
#include <numeric>

#include "liaison/error.hpp"

namespace liaison {

StepFn::StepFn(std::map<int, std::int64_t> deltas, int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw Error(ErrorCode::PreconditionViolated, "step function window is empty");
  std::int64_t total = 0;
  for (const auto& [d, delta] : deltas) {
    if (delta == 0) continue;
    if (d < lo || d > hi) {
      throw Error(ErrorCode::PreconditionViolated,
                  "breakpoint " + std::to_string(d) + " outside window");
    }
    deltas_.emplace(d, delta);
    total += delta;
  }
  if (total != 0) {
    throw Error(ErrorCode::PreconditionViolated, "step function deltas do not sum to zero");
  }
}

StepFn StepFn::from_values(int lo, const std::vector<std::int64_t>& values) {
  std::map<int, std::int64_t> deltas;
  std::int64_t prev = 0;
  int l = lo;
  for (auto v : values) {
    if (v != prev) deltas[l] = v - prev;
    prev = v;
    ++l;
  }
  if (prev != 0) deltas[l] = -prev;
  return StepFn(std::move(deltas), lo, std::max(lo, l));
}

std::int64_t StepFn::eval(int l) const {
  std::int64_t acc = 0;
  for (auto it = deltas_.begin(); it != deltas_.end() && it->first <= l; ++it) acc += it->second;
  return acc;
}

std::int64_t StepFn::sum() const {
  // f is constant between breakpoints; weight each run by its length.
  std::int64_t total = 0;
  std::int64_t value = 0;
  auto it = deltas_.begin();
  while (it != deltas_.end()) {
    value += it->second;
    auto next = std::next(it);
    if (next == deltas_.end()) break;
    total += value * static_cast<std::int64_t>(next->first - it->first);
    it = next;
  }
  return total;
}

std::vector<int> StepFn::support() const {
  std::vector<int> out;
  std::int64_t value = 0;
  for (auto it = deltas_.begin(); it != deltas_.end(); ++it) {
    value += it->second;
    auto next = std::next(it);
    if (value > 0 && next != deltas_.end()) {
      for (int l = it->first; l < next->first; ++l) out.push_back(l);
    }
  }
  return out;
}

std::vector<std::int64_t> StepFn::values() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(hi_ - lo_ + 1));
  std::int64_t value = 0;
  auto it = deltas_.begin();
  for (int l = lo_; l <= hi_; ++l) {
    while (it != deltas_.end() && it->first <= l) value += (it++)->second;
    out.push_back(value);
  }
  return out;
}

StepFn StepFn::shifted(int k) const {
  std::map<int, std::int64_t> moved;
  for (const auto& [d, delta] : deltas_) moved.emplace(d + k, delta);
  return StepFn(std::move(moved), lo_ + k, hi_ + k);
}

StepFn StepFn::operator+(const StepFn& other) const {
  std::map<int, std::int64_t> merged = deltas_;
  for (const auto& [d, delta] : other.deltas_) merged[d] += delta;
  return StepFn(std::move(merged), std::min(lo_, other.lo_), std::max(hi_, other.hi_));
}

std::string StepFn::signature() const {
  std::string out;
  for (const auto& [d, delta] : deltas_) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
    out += ':';
    if (delta > 0) out += '+';
    out += std::to_string(delta);
  }
  return out;
}

}  // namespace liaison
