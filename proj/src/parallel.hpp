#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace rdd::detail {

// Worker count: hardware concurrency, capped by RADIAL_MM_THREADS when the
// variable holds a positive integer (malformed values are ignored).
inline std::size_t thread_budget() {
  std::size_t budget = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RADIAL_MM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      budget = std::min<std::size_t>(budget, static_cast<std::size_t>(v));
    }
  }
  return budget;
}

// Runs body(i) for i in [0, n). Each index is processed exactly once by some
// worker; bodies must write to disjoint state so results are independent of
// the schedule.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rdd::detail
