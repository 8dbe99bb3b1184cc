#pragma once

// Minimal index-parallel map for grid sweeps. Thread count defaults to the
// hardware concurrency and is capped by the GGE_THERMO_THREADS environment
// variable; results are written by index, so output order never depends on
// scheduling.

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace gge_thermo {

inline int max_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("GGE_THERMO_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < hw) hw = cap;
    } catch (const std::exception&) {
      // unparsable cap: ignore and keep the hardware default
    }
  }
  return hw;
}

template <typename Fn>
void parallel_for(long n, Fn&& body, int threads = 0) {
  if (threads <= 0) threads = max_threads();
  if (n <= 0) return;
  if (threads == 1 || n == 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  if (threads > n) threads = static_cast<int>(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    long begin = n * t / threads;
    long end = n * (t + 1) / threads;
    pool.emplace_back([begin, end, &body] {
      for (long i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gge_thermo
