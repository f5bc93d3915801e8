// Copyright 2026 The dysaug Authors.
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

#ifndef DYSAUG_AUGMENT_PIPELINE_H_
#define DYSAUG_AUGMENT_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dysaug/manifest.h"
#include "dysaug/severity.h"

namespace dysaug {

struct BatchOptions {
  std::vector<SeverityLevel> severities{kAllSeverities.begin(), kAllSeverities.end()};
  int replication = 2;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  // Relative audio paths in the manifest are resolved against this.
  std::filesystem::path audio_root;
  // Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 1;
};

struct BatchFailure {
  std::string id;
  std::string message;
};

struct BatchResult {
  std::vector<AugmentRecord> records;  // manifest order, draw order within an entry
  std::vector<BatchFailure> failures;
};

// Draws `replication` distinct levels from `pool` with a generator seeded
// only by (seed, id). The pool is deduplicated and sorted first, so the
// result does not depend on how the caller listed the levels.
std::vector<SeverityLevel> draw_severities(std::vector<SeverityLevel> pool, int replication,
                                           std::uint64_t seed, std::string_view id);

// For every entry: read, resample to 16 kHz, then for each drawn severity run
// pertubate_signal and write <out_dir>/<id>_<severity>.wav. Per-entry
// failures are collected in the result and never abort the batch.
//
// Throws InvalidArgument for an empty manifest, an empty severity set, or
// replication outside [1, |severities|], and Error if out_dir cannot be
// written.
BatchResult run_batch(const std::vector<ManifestEntry>& manifest, const BatchOptions& options);

struct GenderSplit {
  std::vector<ManifestEntry> female;
  std::vector<ManifestEntry> male;
  std::vector<ManifestEntry> unknown;
};

GenderSplit split_by_gender(const std::vector<ManifestEntry>& manifest);

}  // namespace dysaug

#endif  // DYSAUG_AUGMENT_PIPELINE_H_
