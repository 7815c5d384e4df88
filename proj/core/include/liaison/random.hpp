#pragma once

#include <cstdint>
#include <random>

namespace liaison {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Independent per-trial seed derived from a run seed (splitmix64 finalizer).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace liaison
