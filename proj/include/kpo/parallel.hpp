#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace kpo {

// Runs fn(i) for i in [0, n). Work items must write only to index-addressed
// storage; combined with the counter RNG this keeps every result identical
// for any thread count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int m = threads < static_cast<int>(n) ? threads : static_cast<int>(n);
  pool.reserve(m);
  for (int t = 0; t < m; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace kpo
