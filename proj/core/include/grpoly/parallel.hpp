#pragma once

/// \file parallel.hpp
/// \brief Index-parallel map with results merged in input order.

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace grpoly {

/// Worker count from GRPOLY_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t default_thread_count();

/// Computes f(0), ..., f(count - 1) on up to `threads` workers (0 = default)
/// and returns them in index order. If any call throws, the exception of the
/// smallest failing index is rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t count, F&& f, std::size_t threads = 0)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  if (threads == 0) threads = default_thread_count();
  if (threads > count) threads = count;
  std::vector<R> out;
  out.reserve(count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
    return out;
  }

  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace grpoly
