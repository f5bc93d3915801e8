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

#include "dysaug/augment_pipeline.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "dysaug/audio_io.h"
#include "dysaug/error.h"
#include "dysaug/resample.h"
#include "dysaug/rng.h"

namespace dysaug {
namespace {

struct EntryOutcome {
  std::vector<AugmentRecord> records;
  std::vector<BatchFailure> failures;
};

bool safe_file_stem(const std::string& id) {
  return !id.empty() && id != "." && id != ".." &&
         id.find_first_of("/\\") == std::string::npos && id.find('\0') == std::string::npos;
}

EntryOutcome process_entry(const ManifestEntry& entry, const BatchOptions& options,
                           const std::vector<SeverityLevel>& pool) {
  EntryOutcome outcome;
  if (!safe_file_stem(entry.id)) {
    outcome.failures.push_back({entry.id, "id cannot be used as a file name"});
    return outcome;
  }

  Waveform healthy;
  try {
    std::filesystem::path audio = entry.audio;
    if (audio.is_relative() && !options.audio_root.empty()) audio = options.audio_root / audio;
    healthy = resample(read_wav(audio), kTargetSampleRate);
  } catch (const Error& e) {
    outcome.failures.push_back({entry.id, e.what()});
    return outcome;
  }

  for (SeverityLevel level : draw_severities(pool, options.replication, options.seed, entry.id)) {
    const PerturbationParams params = params_for(level);
    const std::string out_id = entry.id + "_" + to_string(level);
    const std::filesystem::path out_path = options.out_dir / (out_id + ".wav");
    try {
      write_wav(pertubate_signal(healthy, params), out_path);
    } catch (const Error& e) {
      outcome.failures.push_back({out_id, e.what()});
      continue;
    }
    AugmentRecord record;
    record.entry = entry;
    record.entry.id = out_id;
    record.entry.audio = out_path.string();
    record.source_id = entry.id;
    record.severity = level;
    record.r1 = params.r1.value();
    record.r2 = params.r2.value();
    outcome.records.push_back(std::move(record));
  }
  return outcome;
}

void check_writable(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw Error(dir.string() + ": cannot create output directory");
  const auto probe = dir / ".dysaug-write-probe";
  {
    std::ofstream out(probe, std::ios::binary);
    if (!out) throw Error(dir.string() + ": output directory is not writable");
  }
  std::filesystem::remove(probe, ec);
}

}  // namespace

std::vector<SeverityLevel> draw_severities(std::vector<SeverityLevel> pool, int replication,
                                           std::uint64_t seed, std::string_view id) {
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (replication < 1 || static_cast<std::size_t>(replication) > pool.size())
    throw InvalidArgument("replication " + std::to_string(replication) + " must be in [1, " +
                          std::to_string(pool.size()) + "]");

  SplitMix64 rng(SplitMix64(seed).next() ^ fnv1a64(id));
  // Partial Fisher-Yates: the first `replication` slots are the draw.
  for (std::size_t i = 0; i < static_cast<std::size_t>(replication); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(replication));
  return pool;
}

BatchResult run_batch(const std::vector<ManifestEntry>& manifest, const BatchOptions& options) {
  if (manifest.empty()) throw InvalidArgument("manifest is empty");
  if (options.severities.empty()) throw InvalidArgument("severity set is empty");
  std::vector<SeverityLevel> pool = options.severities;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (options.replication < 1 || static_cast<std::size_t>(options.replication) > pool.size())
    throw InvalidArgument("replication " + std::to_string(options.replication) +
                          " exceeds the number of severities (" + std::to_string(pool.size()) +
                          ")");
  check_writable(options.out_dir);

  std::vector<EntryOutcome> outcomes(manifest.size());
  unsigned jobs = options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(manifest.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < manifest.size(); i = next++)
      outcomes[i] = process_entry(manifest[i], options, pool);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }

  BatchResult result;
  for (auto& o : outcomes) {
    std::move(o.records.begin(), o.records.end(), std::back_inserter(result.records));
    std::move(o.failures.begin(), o.failures.end(), std::back_inserter(result.failures));
  }
  return result;
}

GenderSplit split_by_gender(const std::vector<ManifestEntry>& manifest) {
  GenderSplit split;
  for (const auto& e : manifest) {
    switch (e.gender) {
      case Gender::kFemale: split.female.push_back(e); break;
      case Gender::kMale: split.male.push_back(e); break;
      case Gender::kUnknown: split.unknown.push_back(e); break;
    }
  }
  return split;
}

}  // namespace dysaug
