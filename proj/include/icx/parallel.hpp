// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic fork-join over contiguous ranges of n.

#ifndef ICX_PARALLEL_HPP_
#define ICX_PARALLEL_HPP_

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace icx {

// Caps worker threads for every scan; 0 restores hardware concurrency.
void set_max_threads(unsigned threads);
unsigned max_threads();

// Splits [lo, hi] into at most max_threads() contiguous blocks, runs
// chunk(a, b) on each and folds the results left to right, so the result
// does not depend on the thread count when combine is associative.
template <typename T, typename Chunk, typename Combine>
T parallel_reduce(std::uint64_t lo, std::uint64_t hi, T init, Chunk chunk,
                  Combine combine) {
  if (hi < lo) return init;
  const std::uint64_t span = hi - lo + 1;
  std::uint64_t blocks = max_threads();
  if (span < 4096 || blocks <= 1) return combine(std::move(init), chunk(lo, hi));
  if (blocks > span) blocks = span;

  std::vector<T> partial(blocks, init);
  std::vector<std::exception_ptr> errors(blocks);
  std::vector<std::thread> workers;
  workers.reserve(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t a = lo + span * b / blocks;
    const std::uint64_t z = lo + span * (b + 1) / blocks - 1;
    workers.emplace_back([&, a, z, b] {
      try {
        partial[b] = chunk(a, z);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& p : partial) init = combine(std::move(init), std::move(p));
  return init;
}

}  // namespace icx

#endif  // ICX_PARALLEL_HPP_
