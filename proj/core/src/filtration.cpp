#include "liaison/filtration.hpp"

#include <algorithm>
#include <string>

namespace liaison {

namespace {

struct Slot {
  int key;
  int rank;
  bool is_g;
};

std::vector<Slot> ordered_slots(const std::vector<int>& b_list, int g_rank, GTiePosition tie) {
  std::vector<Slot> slots;
  slots.reserve(b_list.size() + 1);
  for (int b : b_list) slots.push_back({b, 1, false});
  slots.push_back({0, g_rank, true});
  std::stable_sort(slots.begin(), slots.end(), [tie](const Slot& x, const Slot& y) {
    if (x.key != y.key) return x.key < y.key;
    return tie == GTiePosition::Last ? (!x.is_g && y.is_g) : (x.is_g && !y.is_g);
  });
  return slots;
}

}  // namespace

Filtration filtration_from_twists(const std::vector<int>& a_list_in,
                                  const std::vector<int>& b_list_in, int g_rank,
                                  GTiePosition tie) {
  Filtration out;
  out.a_list = a_list_in;
  out.b_list = b_list_in;
  std::sort(out.a_list.begin(), out.a_list.end());
  std::sort(out.b_list.begin(), out.b_list.end());
  const auto& a = out.a_list;
  const int k = static_cast<int>(a.size());

  const auto slots = ordered_slots(out.b_list, g_rank, tie);
  const int slot_count = static_cast<int>(slots.size());
  std::vector<int> rank_prefix(slots.size() + 1, 0);
  std::vector<char> g_prefix(slots.size() + 1, 0);
  for (std::size_t j = 0; j < slots.size(); ++j) {
    rank_prefix[j + 1] = rank_prefix[j] + slots[j].rank;
    g_prefix[j + 1] = static_cast<char>(g_prefix[j] || slots[j].is_g);
  }

  auto push_stage = [&](int m, int r, int threshold) {
    FiltrationStage s;
    s.index = static_cast<int>(out.stages.size()) + 1;
    s.m = m;
    s.r = r;
    s.rank_f = rank_prefix[static_cast<std::size_t>(m)];
    s.rank_e = r;
    s.alpha = s.rank_f - s.rank_e;
    s.includes_g = g_prefix[static_cast<std::size_t>(m)] != 0;
    s.threshold = threshold;
    out.stages.push_back(s);
  };

  if (k == 0) {
    push_stage(slot_count, 0, 0);
  } else {
    int prev_r = 0;
    while (true) {
      const int threshold = a[static_cast<std::size_t>(prev_r)];
      const auto upper = std::upper_bound(slots.begin(), slots.end(), threshold,
                                          [](int t, const Slot& s) { return t < s.key; });
      const int m = static_cast<int>(std::distance(slots.begin(), upper));
      if (m == slot_count) {
        push_stage(m, k, threshold);
        break;
      }
      const int next_key = slots[static_cast<std::size_t>(m)].key;
      // least r with next_key <= a_{r+1}
      const auto hit = std::lower_bound(a.begin(), a.end(), next_key);
      if (hit == a.end()) {
        // Remaining slots exceed every a_i: close with one extra stage.
        push_stage(m, k, threshold);
        push_stage(slot_count, k, a.back());
        break;
      }
      const int r = static_cast<int>(std::distance(a.begin(), hit));
      push_stage(m, r, threshold);
      prev_r = r;
    }
  }

  for (std::size_t i = 0; i + 1 < out.stages.size(); ++i) {
    const auto& s = out.stages[i];
    if (s.rank_f <= s.rank_e) {
      throw Error(ErrorCode::Degenerate,
                  "stage " + std::to_string(s.index) + " has rank F_i = " +
                      std::to_string(s.rank_f) + " <= rank E_i = " + std::to_string(s.rank_e));
    }
  }
  out.final_alpha = rank_prefix.back() - k;
  return out;
}

Filtration canonical_filtration(const ResolutionSpec& spec, GTiePosition tie) {
  const auto minimal = minimal_part(spec);
  auto f = filtration_from_twists(minimal.a_list, minimal.b_list, spec.g().rank, tie);
  f.cancelled = minimal.cancelled;
  return f;
}

bool interior_alpha_condition(const Filtration& f) {
  for (std::size_t i = 0; i + 1 < f.stages.size(); ++i) {
    if (f.stages[i].alpha < 2) return false;
  }
  return true;
}

bool alpha_condition(const Filtration& f) {
  return interior_alpha_condition(f) && f.final_alpha == 1;
}

std::vector<LocalMinimum> local_minima(const Filtration& f, const StepFn& eta_fn, int a_plus_h) {
  std::vector<LocalMinimum> out;
  for (std::size_t i = 0; i + 1 < f.stages.size(); ++i) {
    const auto& s = f.stages[i];
    const int a_r = f.a_list[static_cast<std::size_t>(s.r - 1)];
    LocalMinimum lm;
    lm.stage = s.index;
    lm.degree = a_r + a_plus_h;
    lm.expected = a_r < 0 ? s.alpha : s.alpha - 1;
    lm.actual = eta_fn.eval(lm.degree);
    out.push_back(lm);
  }
  return out;
}

}  // namespace liaison
