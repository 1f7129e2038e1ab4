#ifndef POLYCOUNT_SWEEP_HPP
#define POLYCOUNT_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polycount {

/// Evaluates f(i) for i = first..last on up to `jobs` threads and returns the
/// results in index order. The first exception thrown by f is rethrown.
template <class T, class F>
std::vector<T> ordered_sweep(std::int64_t first, std::int64_t last, unsigned jobs, F f) {
  if (last < first) return {};
  const auto count = static_cast<std::size_t>(last - first + 1);
  std::vector<T> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = f(first + static_cast<std::int64_t>(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };

  const unsigned threads = jobs == 0 ? 1 : static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace polycount

#endif  // POLYCOUNT_SWEEP_HPP
