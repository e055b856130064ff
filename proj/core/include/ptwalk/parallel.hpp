#ifndef PTWALK_PARALLEL_HPP
#define PTWALK_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ptwalk {

/// Run fn(i) for i in [0, n) on a small thread pool. Work items must be
/// independent; callers keep determinism by writing results into
/// preallocated slots indexed by i. The first exception thrown by any item
/// is rethrown on the calling thread.
template <typename F>
void parallel_for(std::size_t n, F&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t num_threads = hw == 0 ? 1 : hw;
  if (num_threads > n) num_threads = n == 0 ? 1 : n;

  if (num_threads <= 1 || n < 4) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::vector<std::thread> workers;
  workers.reserve(num_threads);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < num_threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += num_threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ptwalk

#endif  // PTWALK_PARALLEL_HPP
