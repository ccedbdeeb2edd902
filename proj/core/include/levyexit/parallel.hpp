// Copyright 2026 The levyexit Authors
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

namespace levyexit {

/// Worker count from LEVY_EXIT_JOBS, else the hardware concurrency (>= 1).
int default_jobs();

/// Calls body(i) for i in [0, n) on up to `jobs` threads using contiguous
/// blocks. Each index is visited exactly once; the first exception thrown by
/// any worker is rethrown on the caller's thread.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace levyexit
