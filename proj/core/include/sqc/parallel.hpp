#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sqc {

  // 0 means "use the hardware concurrency".
  inline unsigned resolve_threads(unsigned requested) noexcept {
    if (requested != 0) {
      return requested;
    }
    return std::max(1U, std::thread::hardware_concurrency());
  }

  // Calls fn(i) for every i in [0, n) on up to `threads` workers, handing out
  // indices dynamically. The first exception thrown by fn is rethrown.
  template <typename Fn>
  void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = std::min<unsigned>(resolve_threads(threads),
                                 static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     work = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          next = n;
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace sqc
