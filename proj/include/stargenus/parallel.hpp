#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stargenus {

/// 0 means one thread per hardware core.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks and calls fn(chunk, begin, end)
/// once per chunk, concurrently. The chunking depends only on `count` and
/// `threads`; callers reduce per-chunk results in chunk order.
template <typename Fn>
unsigned parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), count));
  const std::uint64_t step = (count + workers - 1) / workers;
  if (workers == 1) {
    fn(0U, std::uint64_t{0}, count);
    return 1;
  }
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::jthread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * step;
    const std::uint64_t end = std::min(count, begin + step);
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(static_cast<unsigned>(w), begin, end);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return static_cast<unsigned>(workers);
}

}  // namespace stargenus
