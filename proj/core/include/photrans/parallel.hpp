// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace photrans {

// Runs fn(i) for i in [0, n) across up to `workers` threads in contiguous
// chunks. Each index is evaluated exactly once and results must be written
// to caller-owned, index-addressed storage, so the outcome is identical for
// any worker count.
template <typename Fn>
void parallel_for_indexed(std::size_t n, int workers, Fn&& fn) {
  if (n == 0) return;
  const std::size_t nw = workers > 1 ? std::min<std::size_t>(workers, n) : 1;
  if (nw == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nw);
  const std::size_t chunk = (n + nw - 1) / nw;
  for (std::size_t w = 0; w < nw; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace photrans
