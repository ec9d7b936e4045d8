#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sccore {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Worker w takes
/// indices w, w + workers, ... so the assignment is deterministic. Callers write
/// results into per-index slots and merge in index order. The first exception
/// (by index) is rethrown after all workers finish.
template <class Fn>
void parallel_for(size_t count, int workers, Fn&& fn) {
  size_t w = static_cast<size_t>(std::max(1, workers));
  w = std::min(w, std::max<size_t>(count, 1));
  if (w <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (size_t k = 0; k < w; ++k) {
    threads.emplace_back([&, k] {
      for (size_t i = k; i < count; i += w) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace sccore
