#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ldcl {

/// How many worker threads per-set stages may use. Results never depend on
/// the thread count: every worker writes to its own output slots.
struct Execution {
  unsigned threads = 1;

  static Execution sequential() { return Execution{1}; }
  static Execution hardware() { return Execution{std::max(1u, std::thread::hardware_concurrency())}; }
  static Execution with_threads(unsigned n) { return Execution{std::max(1u, n)}; }
};

/// Calls body(i) for every i in [0, count), splitting the range into
/// contiguous chunks. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Execution exec, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(exec.threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ldcl
