#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace grpwl {

// Worker count used when callers pass 0.
inline unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into at most `threads` contiguous chunks and calls
// fn(worker, begin, end) for each. Chunk boundaries depend only on
// (count, threads), so per-chunk results merged in worker order are
// reproducible. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = default_threads();
  std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  std::size_t base = count / workers, extra = count % workers, begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t end = begin + base + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, unsigned threads) {
  if (threads == 0) threads = default_threads();
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
}

}  // namespace grpwl
