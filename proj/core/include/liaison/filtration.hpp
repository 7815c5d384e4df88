#pragma once

#include <cstdint>
#include <vector>

#include "liaison/resolution.hpp"
#include "liaison/step_function.hpp"

namespace liaison {

/// Where G sits among summands of F whose key is also 0. Either choice yields
/// the same stage counts and ranks.
enum class GTiePosition { Last, First };

struct FiltrationStage {
  int index = 0;       // 1-based
  int m = 0;           // slots of F in F_i (G counts as one slot)
  int r = 0;           // summands of E in E_i
  int rank_f = 0;      // m, plus r_G - 1 when G is included
  int rank_e = 0;
  int alpha = 0;       // rank_f - rank_e
  bool includes_g = false;
  int threshold = 0;   // a_{r_{i-1}+1}, the key bound used to build F_i

  friend bool operator==(const FiltrationStage&, const FiltrationStage&) = default;
};

struct Filtration {
  std::vector<FiltrationStage> stages;
  int final_alpha = 0;
  /// The twist data the stages were built from (minimal part of the resolution).
  std::vector<int> a_list;
  std::vector<int> b_list;
  int cancelled = 0;

  int n() const noexcept { return static_cast<int>(stages.size()); }
};

/// Staged pairing of E-summands with F-slots on the given lists, without
/// cancelling equal twists. Throws Degenerate if an interior stage has
/// rank F_i <= rank E_i.
Filtration filtration_from_twists(const std::vector<int>& a_list, const std::vector<int>& b_list,
                                  int g_rank, GTiePosition tie = GTiePosition::Last);

/// Canonical filtration of the minimal part of `spec`.
Filtration canonical_filtration(const ResolutionSpec& spec, GTiePosition tie = GTiePosition::Last);

/// alpha_i >= 2 for every interior stage and final alpha = 1.
bool alpha_condition(const Filtration& f);

/// Only the interior-stage half of alpha_condition.
bool interior_alpha_condition(const Filtration& f);

/// eta takes the value alpha_i (a_{r_i} < 0) or alpha_i - 1 (a_{r_i} >= 0)
/// at degree a_{r_i} + a + h for every interior stage i.
struct LocalMinimum {
  int stage = 0;
  int degree = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  bool matches() const noexcept { return expected == actual; }
};

std::vector<LocalMinimum> local_minima(const Filtration& f, const StepFn& eta_fn, int a_plus_h);

}  // namespace liaison
