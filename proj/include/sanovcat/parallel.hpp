#pragma once

// Minimal fork-join helpers for the exhaustive scans. Work is cut into
// contiguous chunks and per-chunk results come back in chunk order, so any
// "first witness" logic downstream sees the same sequence for every thread
// count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sanovcat {

/// Worker count used by all scans; 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(begin, end) over [0, n) split into chunks; returns the per-chunk
/// values in order.
template <class T, class F>
std::vector<T> parallel_chunks(std::size_t n, F&& body) {
  const std::size_t workers = thread_count();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(n, workers * 4));
  std::vector<T> out(chunks);
  if (n == 0) return out;
  auto bound = [&](std::size_t k) { return n * k / chunks; };
  if (workers <= 1) {
    for (std::size_t k = 0; k < chunks; ++k) out[k] = body(bound(k), bound(k + 1));
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < chunks;) {
      try {
        out[k] = body(bound(k), bound(k + 1));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(workers, chunks); ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
  parallel_chunks<char>(n, [&](std::size_t b, std::size_t e) {
    body(b, e);
    return char{};
  });
}

}  // namespace sanovcat
