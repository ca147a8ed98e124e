#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dawn::detail {

/// Calls fn(k) for every k in [0, count) on up to `threads` workers that
/// claim indices from a shared counter. The first exception thrown by any
/// call is rethrown after all workers have joined.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  const auto workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(threads, 1U), count));
  if (workers <= 1) {
    for (std::uint64_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (auto k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
          try {
            fn(k);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(count);
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace dawn::detail
