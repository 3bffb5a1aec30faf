#pragma once
// Small utilities: thread-capped deterministic parallel loops.
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ihara {

// Parallelism cap: min(hardware, IHARA_THREADS if set). Always >= 1.
inline unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("IHARA_THREADS")) {
    long v = std::atol(env);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

// Runs fn(i) for i in [0, n). Results must be written to per-index slots by
// the caller so that aggregation order (and hence output) is deterministic.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned nt = std::min<std::size_t>(thread_cap(), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) {
    threads.emplace_back([&, t]() {
      for (std::size_t i = t; i < n; i += nt) fn(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace ihara
