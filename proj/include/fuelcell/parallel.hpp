// Copyright 2026 The Fuelcell Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace fuelcell {

/// Worker count from an explicit request, falling back to FUELCELL_JOBS and
/// then to the hardware concurrency. Always at least 1.
int resolve_jobs(int requested = 0);

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Work is handed
/// out by index, so results written to slot i are independent of scheduling.
/// The first exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace fuelcell
