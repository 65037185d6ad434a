// Copyright 2026 The snnaccel Authors
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

#ifndef SNNACCEL_PARALLEL_H_
#define SNNACCEL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace snnaccel {

// Resolves a worker count: 0 means "all hardware threads", never less than 1.
unsigned ResolveJobs(unsigned jobs);

// Calls fn(i) for every i in [0, n) on up to `jobs` threads. Work is handed
// out in contiguous blocks, so callers that write only to slot i get results
// independent of the worker count. The first exception thrown by any call is
// rethrown after all workers stop.
void ParallelFor(std::size_t n, unsigned jobs,
                 const std::function<void(std::size_t)>& fn);

}  // namespace snnaccel

#endif  // SNNACCEL_PARALLEL_H_
