#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ucob {

// Worker count: hardware concurrency capped by the SKEIN_THREADS env var.
inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("SKEIN_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

// Runs fn(i) for i in [0, n) across worker threads (striped).
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      for (size_t i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : threads) t.join();
}

}  // namespace ucob
