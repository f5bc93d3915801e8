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

#ifndef DYSAUG_MANIFEST_H_
#define DYSAUG_MANIFEST_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dysaug/severity.h"

namespace dysaug {

enum class Gender { kFemale, kMale, kUnknown };

std::string to_string(Gender g);
// Accepts "female"/"f" and "male"/"m" in any case; anything else is kUnknown.
Gender parse_gender(std::string_view s);

// One healthy utterance. Manifests are UTF-8 JSON Lines with fields
// id, audio, text, speaker, gender.
struct ManifestEntry {
  std::string id;
  std::string audio;
  std::string text;
  std::string speaker;
  Gender gender = Gender::kUnknown;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

// One synthesized utterance: the entry fields of the output clip plus its
// provenance. Serialized with the extra fields source_id, severity, r1, r2.
struct AugmentRecord {
  ManifestEntry entry;
  std::string source_id;
  SeverityLevel severity = SeverityLevel::kS1;
  double r1 = 1.0;
  double r2 = 1.0;

  friend bool operator==(const AugmentRecord&, const AugmentRecord&) = default;
};

// Throws FormatError with the 1-based line number on malformed lines or
// duplicate ids. Blank lines are skipped.
std::vector<ManifestEntry> read_manifest(std::istream& in);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries);
void write_records(std::ostream& out, const std::vector<AugmentRecord>& records);
std::vector<AugmentRecord> read_records(std::istream& in);

}  // namespace dysaug

#endif  // DYSAUG_MANIFEST_H_
