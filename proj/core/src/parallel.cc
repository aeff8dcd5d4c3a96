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
#include "mmcoreset/parallel.h"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace mmcoreset {

std::size_t ResolveThreads(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t count, std::size_t threads, std::size_t min_chunk,
                 const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  threads = std::min(threads, count / std::max<std::size_t>(1, min_chunk));
  if (threads <= 1) {
    body(0, count);
    return;
  }
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::jthread> workers;
  workers.reserve(threads - 1);
  for (std::size_t w = 1; w < threads; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    workers.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    body(0, std::min(count, chunk));
  } catch (...) {
    errors[0] = std::current_exception();
  }
  workers.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mmcoreset
