#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace liaison::detail {

/// Evaluates fn(i) for i in [0, n) on up to `workers` threads, each owning a
/// contiguous index range. Results are returned in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned workers, Fn fn) {
  std::vector<T> results(n);
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          const std::size_t end = std::min(n, (t + 1) * chunk);
          for (std::size_t i = t * chunk; i < end; ++i) results[i] = fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace liaison::detail
