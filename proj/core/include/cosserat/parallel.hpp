// Copyright (c) 2026 the cosserat project developers. See the top-level
// LICENSE file for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef COSSERAT_PARALLEL_HPP
#define COSSERAT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cosserat {

inline unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n), chunked over a thread pool. fn must be safe to
/// call concurrently for distinct indices.
template <class F>
void parallel_for(std::size_t n, F&& fn, std::size_t chunk = 256) {
  if (n == 0) return;
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), n_chunks));
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const std::size_t lo = c * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads - 1);
  for (unsigned t = 0; t + 1 < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

/// Sum of value_at(i) for i in [0, n) with a fixed chunk decomposition and a
/// pairwise tree over the chunk partials. The summation order is independent
/// of the thread count, so results are run-to-run identical.
template <class F>
double deterministic_sum(std::size_t n, F&& value_at, std::size_t chunk = 4096) {
  if (n == 0) return 0.0;
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  std::vector<double> partial(n_chunks, 0.0);
  parallel_for(
      n_chunks,
      [&](std::size_t c) {
        const std::size_t lo = c * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += value_at(i);
        partial[c] = s;
      },
      1);
  // Pairwise reduction of the partials in index order.
  std::vector<double> level = std::move(partial);
  while (level.size() > 1) {
    std::vector<double> up((level.size() + 1) / 2, 0.0);
    for (std::size_t i = 0; i < up.size(); ++i) {
      const std::size_t a = 2 * i, b = 2 * i + 1;
      up[i] = b < level.size() ? level[a] + level[b] : level[a];
    }
    level = std::move(up);
  }
  return level[0];
}

}  // namespace cosserat

#endif  // COSSERAT_PARALLEL_HPP
