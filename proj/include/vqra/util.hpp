// Copyright 2026 The vqra Authors
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
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace vqra {

/// Seed-splitting rule: every run derives all of its randomness from one
/// top-level seed. Training round r uses `seed + r`; the dataset stream uses
/// `seed + kDatasetSeedTag`. The tag keeps the dataset stream disjoint from
/// any realistic round index.
inline constexpr std::uint64_t kDatasetSeedTag = 1000003;

/// FNV-1a 64-bit hash. Used for output-file content hashes in run manifests
/// and for deriving per-input shot-sampling seeds.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(std::string_view s);

/// Runs `task(i)` for i in [0, task_count) on up to `jobs` threads.
/// Tasks must write only to their own slots; the first exception thrown by
/// any task is rethrown on the calling thread after all workers join.
void run_parallel(std::size_t task_count, int jobs,
                  const std::function<void(std::size_t)>& task);

/// Default worker count for sweep/round parallelism.
int default_jobs();

}  // namespace vqra
