// Copyright 2026 The jumpfeed Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace jumpfeed {

/// Worker cap: JUMPFEED_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(i) for i in [0, n) on up to worker_count() threads. Tasks must be
/// independent; the first exception thrown by any task is rethrown after all
/// workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

}  // namespace jumpfeed
