#pragma once

// Independent reference computations. They deliberately avoid the library's
// algorithms: eta by per-degree counting, determinants by the Leibniz formula,
// rank counts in closed form, exploration by exhaustive move sequences.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// eta(l) counted directly from the twist lists.
inline std::int64_t eta_at(const std::vector<int>& a_list, const std::vector<int>& b_list, int rank,
                           int a_plus_h, int l) {
  const int t = l - a_plus_h;
  std::int64_t v = 0;
  for (int b : b_list) v += b <= t ? 1 : 0;
  for (int a : a_list) v -= a <= t ? 1 : 0;
  if (t >= 0) v += rank - 1;
  return v;
}

inline int height(const std::vector<int>& a_list, const std::vector<int>& b_list) {
  return std::accumulate(a_list.begin(), a_list.end(), 0) - std::accumulate(b_list.begin(), b_list.end(), 0);
}

/// Degrees where eta can be nonzero, padded by one on each side.
inline std::pair<int, int> window(const std::vector<int>& a_list, const std::vector<int>& b_list,
                                  int a_plus_h) {
  int lo = 0;
  int hi = 0;
  for (int k : a_list) lo = std::min(lo, k), hi = std::max(hi, k);
  for (int k : b_list) lo = std::min(lo, k), hi = std::max(hi, k);
  return {a_plus_h + lo - 1, a_plus_h + hi + 1};
}

/// Realizability as the ideal-mode checks describe it: eta >= 0 everywhere
/// and eta > 0 from its first nonzero degree up to a + h - 1.
inline bool realizable(const std::vector<int>& a_list, const std::vector<int>& b_list, int rank, int a) {
  if (a_list.size() != b_list.size() + static_cast<std::size_t>(rank) - 1) return false;
  const int h = height(a_list, b_list);
  if (h < 0) return false;
  const int ah = a + h;
  const auto [lo, hi] = window(a_list, b_list, ah);
  std::optional<int> first;
  for (int l = lo; l <= hi; ++l) {
    const auto v = eta_at(a_list, b_list, rank, ah, l);
    if (v < 0) return false;
    if (v > 0 && !first) first = l;
  }
  if (first) {
    for (int l = *first; l < ah; ++l) {
      if (eta_at(a_list, b_list, rank, ah, l) <= 0) return false;
    }
  }
  return true;
}

/// Connected about d on an explicit support set, stated through the two
/// one-sided conditions.
inline bool connected_about(const std::set<int>& support, int d) {
  std::vector<int> below;
  std::vector<int> above;
  for (int l : support) (l < d ? below : above).push_back(l);
  for (std::size_t i = 0; i < below.size(); ++i) {
    if (below[i] != d - static_cast<int>(below.size()) + static_cast<int>(i)) return false;
  }
  for (std::size_t i = 0; i < above.size(); ++i) {
    if (above[i] != d + static_cast<int>(i)) return false;
  }
  return true;
}

/// Determinant over F_p by the Leibniz formula.
inline std::uint32_t det_mod(const std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]] % p;
    total += inversions % 2 == 0 ? prod : (p - prod) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint32_t>(total % p);
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Number of a x b matrices over F_q of rank exactly k:
/// prod_{i<k} (q^a - q^i)(q^b - q^i) / (q^k - q^i).
inline std::uint64_t exact_rank_count(int a, int b, int k, std::uint64_t q) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (ipow(q, a) - ipow(q, i)) * (ipow(q, b) - ipow(q, i));
    den *= ipow(q, k) - ipow(q, i);
  }
  return num / den;
}

inline std::uint64_t rank_at_most(int a, int b, int c, std::uint64_t q) {
  std::uint64_t total = 0;
  for (int k = 0; k <= c; ++k) total += exact_rank_count(a, b, k, q);
  return total;
}

struct Twists {
  std::vector<int> a_list;
  std::vector<int> b_list;
};

/// Distinct (eta values, a + h) classes reachable from `start` by at most
/// `depth` basic double links with s in [lo, hi], enumerating every move
/// sequence and keeping realizable results.
inline std::size_t explore_classes(const Twists& start, int rank, int a, int depth, int lo, int hi) {
  using Key = std::pair<std::map<int, std::int64_t>, int>;
  auto key_of = [&](const Twists& t) {
    const int ah = a + height(t.a_list, t.b_list);
    const auto [wlo, whi] = window(t.a_list, t.b_list, ah);
    std::map<int, std::int64_t> values;
    for (int l = wlo; l <= whi; ++l) {
      const auto v = eta_at(t.a_list, t.b_list, rank, ah, l);
      if (v != 0) values[l] = v;
    }
    return Key{values, ah};
  };
  std::set<Key> seen{key_of(start)};
  std::vector<Twists> layer{start};
  for (int step = 0; step < depth; ++step) {
    std::vector<Twists> next;
    for (const auto& t : layer) {
      for (int s = lo; s <= hi; ++s) {
        const int ah = a + height(t.a_list, t.b_list);
        Twists z = t;
        z.a_list.push_back(s - ah);
        z.b_list.push_back(s - ah - 1);
        if (!realizable(z.a_list, z.b_list, rank, a)) continue;
        seen.insert(key_of(z));
        next.push_back(z);
      }
    }
    layer = std::move(next);
  }
  return seen.size();
}

}  // namespace oracle
