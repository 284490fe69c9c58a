#pragma once

// Exhaustive sweeps over basis tuples. Work is split by the first index across
// threads; results are concatenated in lexicographic tuple order, so the
// output never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "hly/superspace.hpp"

namespace hly {

/// Upper bound on worker threads used by sweeps; 0 means hardware concurrency.
inline std::atomic<unsigned>& sweep_thread_limit() {
  static std::atomic<unsigned> limit{0};
  return limit;
}

using TupleResidual = std::pair<std::vector<std::size_t>, Vector>;

/// Calls fn(tuple) for every tuple in {0..n-1}^arity and keeps the nonzero results.
template <class Fn>
std::vector<TupleResidual> sweep(std::size_t n, std::size_t arity, Fn&& fn) {
  std::vector<std::vector<TupleResidual>> by_first(n);
  auto run_first = [&](std::size_t first) {
    std::vector<std::size_t> t(arity, 0);
    t[0] = first;
    for (;;) {
      Vector r = fn(static_cast<const std::vector<std::size_t>&>(t));
      if (!r.is_zero()) by_first[first].emplace_back(t, std::move(r));
      std::size_t k = arity;
      while (k > 1) {
        --k;
        if (++t[k] < n) break;
        t[k] = 0;
        if (k == 1) return;
      }
      if (arity == 1) return;
    }
  };

  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= n;
  unsigned hw = sweep_thread_limit().load();
  if (hw == 0) hw = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(hw, n));

  if (workers <= 1 || total < 512) {
    for (std::size_t f = 0; f < n; ++f) run_first(f);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t f = next++; f < n; f = next++) {
          try {
            run_first(f);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<TupleResidual> out;
  for (auto& chunk : by_first)
    for (auto& r : chunk) out.push_back(std::move(r));
  return out;
}

}  // namespace hly
