#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/random.hpp"
#include "liaison/resolution.hpp"

namespace liaison {

struct GeneratorConfig {
  // Random minimal start: r - 1 zeros in a_list, empty b_list.
  int rank_lo = 2;
  int rank_hi = 6;
  int a_lo = 1;
  int a_hi = 8;
  // BDL chains: up to max_moves attempts, s drawn from [a+h-move_below, a+h+move_above].
  int max_moves = 10;
  int move_below = 3;
  int move_above = 6;
  // Rejection sampler: #b_list in [0, rej_max_b], twists in [-rej_twist, rej_twist].
  int rej_rank_hi = 5;
  int rej_max_b = 6;
  int rej_twist = 6;
  int rej_max_attempts = 100000;
};

enum class SpecGenerator { BdlChain, Rejection };

std::string_view to_string(SpecGenerator g) noexcept;

/// Minimal spec followed by a random sequence of admissible basic double links.
ResolutionSpec generate_bdl_chain(Rng& rng, const GeneratorConfig& config);

/// Uniform random twist data, retried until it validates; nullopt when the
/// attempt budget runs out.
std::optional<ResolutionSpec> generate_rejection(Rng& rng, const GeneratorConfig& config);

struct Counterexample {
  std::size_t trial = 0;
  SpecGenerator generator = SpecGenerator::BdlChain;
  std::string spec;
  std::string reason;
};

struct PropcheckReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t bdl_specs = 0;
  std::size_t rejection_specs = 0;
  std::size_t smoothable = 0;
  std::size_t local_minima_checked = 0;
  std::size_t generator_failures = 0;
  std::uint64_t fingerprint = 0;  // hash over every generated spec, in trial order
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty() && generator_failures == 0; }
};

/// Alternates the two generators by trial parity and checks, on each spec,
/// that the alpha route and the theta route agree and that eta meets the
/// local-minimum correspondence. Results do not depend on `workers`.
PropcheckReport propcheck(std::size_t trials, std::uint64_t seed,
                          const GeneratorConfig& config = {}, unsigned workers = 1);

}  // namespace liaison
