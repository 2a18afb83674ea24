// Copyright 2026 The Tabhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TABHASH_PARALLEL_HPP_
#define TABHASH_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tabhash {

// Number of worker threads for `requested` (0 = hardware concurrency),
// never more than the number of work items.
inline unsigned worker_count(unsigned requested, std::size_t items) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (items < n) n = static_cast<unsigned>(std::max<std::size_t>(items, 1));
  return n;
}

// Runs fn(t) for t in [0, trials) on up to `threads` workers and returns the
// results indexed by trial, so aggregation order never depends on
// scheduling. The first exception thrown by any trial is rethrown.
template <typename Result, typename Fn>
std::vector<Result> run_trials(std::size_t trials, unsigned threads, Fn&& fn) {
  std::vector<Result> results(trials);
  const unsigned workers = worker_count(threads, trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) results[t] = fn(t);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        results[t] = fn(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(trials);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace tabhash

#endif  // TABHASH_PARALLEL_HPP_
