#include "liaison/propcheck.hpp"

#include <algorithm>
#include <sstream>

#include "liaison/eta_theta.hpp"
#include "liaison/filtration.hpp"
#include "liaison/linkage.hpp"
#include "parallel.hpp"

namespace liaison {

std::string_view to_string(SpecGenerator g) noexcept {
  return g == SpecGenerator::BdlChain ? "bdl-chain" : "rejection";
}

ResolutionSpec generate_bdl_chain(Rng& rng, const GeneratorConfig& config) {
  RawResolution raw;
  raw.name = "random-minimal";
  raw.g.rank = rng.uniform(config.rank_lo, config.rank_hi);
  raw.g.a = rng.uniform(config.a_lo, config.a_hi);
  raw.a_list.assign(static_cast<std::size_t>(raw.g.rank - 1), 0);
  ResolutionSpec spec = validate_resolution(raw);

  const int moves = rng.uniform(0, config.max_moves);
  for (int i = 0; i < moves; ++i) {
    const int ah = spec.a_plus_h();
    const int s = rng.uniform(ah - config.move_below, ah + config.move_above);
    if (auto next = try_basic_double_link(spec, s)) spec = std::move(*next);
  }
  return spec;
}

std::optional<ResolutionSpec> generate_rejection(Rng& rng, const GeneratorConfig& config) {
  for (int attempt = 0; attempt < config.rej_max_attempts; ++attempt) {
    RawResolution raw;
    raw.name = "random-twists";
    raw.g.rank = rng.uniform(config.rank_lo, config.rej_rank_hi);
    raw.g.a = rng.uniform(config.a_lo, config.a_hi);
    const int nb = rng.uniform(0, config.rej_max_b);
    for (int j = 0; j < nb; ++j) raw.b_list.push_back(rng.uniform(-config.rej_twist, config.rej_twist));
    for (int i = 0; i < nb + raw.g.rank - 1; ++i) {
      raw.a_list.push_back(rng.uniform(-config.rej_twist, config.rej_twist));
    }
    std::sort(raw.a_list.begin(), raw.a_list.end());
    std::sort(raw.b_list.begin(), raw.b_list.end());
    if (!check_resolution(raw)) return validate_resolution(raw);
  }
  return std::nullopt;
}

namespace {

std::string describe(const ResolutionSpec& spec) {
  std::ostringstream os;
  os << "r=" << spec.g().rank << " a=" << spec.g().a << " a_list=[";
  for (std::size_t i = 0; i < spec.a_list().size(); ++i) os << (i ? "," : "") << spec.a_list()[i];
  os << "] b_list=[";
  for (std::size_t i = 0; i < spec.b_list().size(); ++i) os << (i ? "," : "") << spec.b_list()[i];
  os << "] h=" << spec.height();
  return os.str();
}

std::uint64_t fnv1a(std::uint64_t h, std::int64_t v) {
  for (int byte = 0; byte < 8; ++byte) {
    h ^= static_cast<std::uint64_t>((v >> (8 * byte)) & 0xff);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t spec_hash(const ResolutionSpec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, spec.g().rank);
  h = fnv1a(h, spec.g().a);
  for (int a : spec.a_list()) h = fnv1a(h, a);
  h = fnv1a(h, 0x7fffffff);
  for (int b : spec.b_list()) h = fnv1a(h, b);
  return h;
}

struct TrialOutcome {
  SpecGenerator generator = SpecGenerator::BdlChain;
  bool generated = false;
  bool smoothable = false;
  std::size_t minima = 0;
  std::uint64_t hash = 0;
  std::optional<Counterexample> counterexample;
};

TrialOutcome run_trial(std::size_t index, std::uint64_t seed, const GeneratorConfig& config) {
  TrialOutcome out;
  Rng rng(trial_seed(seed, index));
  out.generator = index % 2 == 0 ? SpecGenerator::BdlChain : SpecGenerator::Rejection;

  std::optional<ResolutionSpec> spec;
  if (out.generator == SpecGenerator::BdlChain) {
    spec = generate_bdl_chain(rng, config);
  } else {
    spec = generate_rejection(rng, config);
  }
  if (!spec) return out;
  out.generated = true;
  out.hash = spec_hash(*spec);

  auto fail = [&](std::string reason) {
    out.counterexample = Counterexample{index, out.generator, describe(*spec), std::move(reason)};
  };

  try {
    const auto filtration = canonical_filtration(*spec);
    const auto eta_fn = eta(*spec);
    const auto theta_fn = theta(eta_fn, spec->a_plus_h());
    const bool connected = is_connected_about(theta_fn, spec->a_plus_h());
    const bool alpha_ok = interior_alpha_condition(filtration);
    out.smoothable = alpha_condition(filtration);

    if (alpha_ok != connected) {
      fail(std::string("alpha route ") + (alpha_ok ? "holds" : "fails") + " but theta is " +
           (connected ? "connected" : "not connected") + " about " +
           std::to_string(spec->a_plus_h()));
      return out;
    }
    if (filtration.final_alpha != 1) {
      fail("final alpha = " + std::to_string(filtration.final_alpha));
      return out;
    }
    for (const auto& lm : local_minima(filtration, eta_fn, spec->a_plus_h())) {
      ++out.minima;
      if (!lm.matches()) {
        fail("eta(" + std::to_string(lm.degree) + ") = " + std::to_string(lm.actual) +
             ", expected " + std::to_string(lm.expected) + " at stage " + std::to_string(lm.stage));
        return out;
      }
    }
  } catch (const Error& e) {
    fail(e.what());
  }
  return out;
}

}  // namespace

PropcheckReport propcheck(std::size_t trials, std::uint64_t seed, const GeneratorConfig& config,
                          unsigned workers) {
  PropcheckReport report;
  report.seed = seed;
  report.trials = trials;
  report.fingerprint = 0xcbf29ce484222325ULL;

  const auto outcomes = detail::parallel_map<TrialOutcome>(
      trials, workers, [&](std::size_t i) { return run_trial(i, seed, config); });

  for (const auto& o : outcomes) {
    if (!o.generated) {
      ++report.generator_failures;
      continue;
    }
    (o.generator == SpecGenerator::BdlChain ? report.bdl_specs : report.rejection_specs)++;
    if (o.smoothable) ++report.smoothable;
    report.local_minima_checked += o.minima;
    report.fingerprint = fnv1a(report.fingerprint, static_cast<std::int64_t>(o.hash));
    if (o.counterexample) report.counterexamples.push_back(*o.counterexample);
  }
  return report;
}

}  // namespace liaison
