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
#ifndef MMCORESET_PARALLEL_H_
#define MMCORESET_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace mmcoreset {

// Resolves a requested thread count; 0 means hardware concurrency.
std::size_t ResolveThreads(std::size_t requested);

// Splits [0, count) into contiguous chunks, one per thread, and calls
// body(begin, end) for each. Runs inline when threads <= 1 or the range is
// smaller than min_chunk per thread. Chunk boundaries depend only on
// (count, threads), so per-index work stays deterministic.
void ParallelFor(std::size_t count, std::size_t threads, std::size_t min_chunk,
                 const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace mmcoreset

#endif  // MMCORESET_PARALLEL_H_
