// Copyright 2026 The m20lattice Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Ordered parallel map over an index range. Work is handed out one index at
// a time through an atomic counter; results land in their own slot, so the
// output order never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace m20lattice {

/// Returns {fn(first), fn(first + 1), ..., fn(last)}. `threads` <= 1 runs
/// inline. The first exception thrown by any worker is rethrown.
template <class Fn>
auto parallel_map(long first, long last, unsigned threads, Fn fn) -> std::vector<decltype(fn(first))> {
  using Result = decltype(fn(first));
  if (last < first) return {};
  const std::size_t count = static_cast<std::size_t>(last - first + 1);
  std::vector<Result> out(count);
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(first + static_cast<long>(k));
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        out[k] = fn(first + static_cast<long>(k));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(threads, count);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace m20lattice
