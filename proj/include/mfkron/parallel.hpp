#ifndef MFKRON_PARALLEL_HPP_
#define MFKRON_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mfkron {

  //! Runs fn(i) for i in [0, count) on up to \p jobs threads.
  //!
  //! Work is handed out dynamically. The first exception thrown by any
  //! worker is rethrown on the calling thread after all workers join.
  template <typename Fn>
  void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2) {
      for (std::size_t i = 0; i < count; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               failure_mutex;
    auto                     worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
          next = count;
        }
      }
    };
    std::vector<std::jthread> threads;
    unsigned const            spawn
        = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) {
      threads.emplace_back(worker);
    }
    threads.clear();
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

}  // namespace mfkron

#endif  // MFKRON_PARALLEL_HPP_
