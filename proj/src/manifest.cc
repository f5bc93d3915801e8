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

#include "dysaug/manifest.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "dysaug/error.h"

namespace dysaug {
namespace {

using nlohmann::json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

json entry_to_json(const ManifestEntry& e) {
  return json{{"id", e.id},
              {"audio", e.audio},
              {"text", e.text},
              {"speaker", e.speaker},
              {"gender", to_string(e.gender)}};
}

std::string string_field(const json& obj, const char* key, bool required, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    if (required)
      throw FormatError("manifest line " + std::to_string(line) + ": missing field '" + key + "'");
    return {};
  }
  if (!it->is_string())
    throw FormatError("manifest line " + std::to_string(line) + ": field '" + key +
                      "' must be a string");
  return it->get<std::string>();
}

ManifestEntry entry_from_json(const json& obj, std::size_t line) {
  if (!obj.is_object())
    throw FormatError("manifest line " + std::to_string(line) + ": expected a JSON object");
  ManifestEntry e;
  e.id = string_field(obj, "id", true, line);
  e.audio = string_field(obj, "audio", true, line);
  e.text = string_field(obj, "text", false, line);
  e.speaker = string_field(obj, "speaker", false, line);
  e.gender = parse_gender(string_field(obj, "gender", false, line));
  if (e.id.empty())
    throw FormatError("manifest line " + std::to_string(line) + ": empty id");
  if (e.audio.empty())
    throw FormatError("manifest line " + std::to_string(line) + ": empty audio path");
  return e;
}

template <typename Fn>
void for_each_json_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError("manifest line " + std::to_string(number) + ": " + e.what());
    }
    fn(obj, number);
  }
}

}  // namespace

std::string to_string(Gender g) {
  switch (g) {
    case Gender::kFemale: return "female";
    case Gender::kMale: return "male";
    case Gender::kUnknown: break;
  }
  return "unknown";
}

Gender parse_gender(std::string_view s) {
  const std::string g = lower(s);
  if (g == "female" || g == "f") return Gender::kFemale;
  if (g == "male" || g == "m") return Gender::kMale;
  return Gender::kUnknown;
}

std::vector<ManifestEntry> read_manifest(std::istream& in) {
  std::vector<ManifestEntry> entries;
  std::unordered_set<std::string> seen;
  for_each_json_line(in, [&](const json& obj, std::size_t line) {
    ManifestEntry e = entry_from_json(obj, line);
    if (!seen.insert(e.id).second)
      throw FormatError("manifest line " + std::to_string(line) + ": duplicate id '" + e.id + "'");
    entries.push_back(std::move(e));
  });
  return entries;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open manifest");
  return read_manifest(in);
}

void write_manifest(std::ostream& out, const std::vector<ManifestEntry>& entries) {
  for (const auto& e : entries) out << entry_to_json(e).dump() << '\n';
}

void write_records(std::ostream& out, const std::vector<AugmentRecord>& records) {
  for (const auto& r : records) {
    json obj = entry_to_json(r.entry);
    obj["source_id"] = r.source_id;
    obj["severity"] = to_string(r.severity);
    obj["r1"] = r.r1;
    obj["r2"] = r.r2;
    out << obj.dump() << '\n';
  }
}

std::vector<AugmentRecord> read_records(std::istream& in) {
  std::vector<AugmentRecord> records;
  for_each_json_line(in, [&](const json& obj, std::size_t line) {
    AugmentRecord r;
    r.entry = entry_from_json(obj, line);
    r.source_id = string_field(obj, "source_id", true, line);
    try {
      r.severity = parse_severity(string_field(obj, "severity", true, line));
      r.r1 = obj.at("r1").get<double>();
      r.r2 = obj.at("r2").get<double>();
    } catch (const json::exception& e) {
      throw FormatError("manifest line " + std::to_string(line) + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw FormatError("manifest line " + std::to_string(line) + ": " + e.what());
    }
    records.push_back(std::move(r));
  });
  return records;
}

}  // namespace dysaug
