#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace disnet {

/// Effective worker count: `requested`, or the hardware count when 0, capped
/// by the DISNET_THREADS environment variable when that is set.
std::size_t resolve_threads(std::size_t requested);

/// Runs body(state, i) for every i in [0, count). Each worker builds its own
/// state once via make_state() and pulls indices from a shared counter.
/// Deterministic results are the caller's job: write into per-index slots and
/// reduce sequentially afterwards. The first exception thrown by a body is
/// rethrown here after all workers stop.
template <typename MakeState, typename Body>
void parallel_for_indexed(std::size_t count, std::size_t threads, MakeState&& make_state,
                          Body&& body) {
  std::size_t workers = resolve_threads(threads);
  if (workers > count) workers = count ? count : 1;

  if (workers <= 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i) body(state, i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      auto state = make_state();
      while (true) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        body(state, i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count, std::memory_order_relaxed);  // drain remaining work
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace disnet
