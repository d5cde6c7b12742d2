// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXEDVOL_PARALLEL_HPP_
#define MIXEDVOL_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mixedvol {

/// Runs fn(index, worker) for index in [0, count) on up to `threads`
/// workers pulling indices from a shared counter. The first exception
/// thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void ParallelFor(size_t count, unsigned threads, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::max<size_t>(1, std::min<size_t>(threads, count)));
  if (workers <= 1) {
    for (size_t k = 0; k < count; ++k) fn(k, 0u);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&](unsigned worker) {
    try {
      for (size_t k = next++; k < count; k = next++) fn(k, worker);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline unsigned WorkerCount(unsigned threads, size_t count) {
  return static_cast<unsigned>(std::max<size_t>(1, std::min<size_t>(threads, count)));
}

}  // namespace mixedvol

#endif  // MIXEDVOL_PARALLEL_HPP_
