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

#ifndef DYSAUG_SEVERITY_H_
#define DYSAUG_SEVERITY_H_

#include <array>
#include <string>
#include <string_view>

#include "dysaug/tempo_wsola.h"

namespace dysaug {

// Dysarthria severity presets, mildest first.
enum class SeverityLevel : int { kS1 = 1, kS2 = 2, kS3 = 3, kS4 = 4 };

inline constexpr std::array<SeverityLevel, 4> kAllSeverities = {
    SeverityLevel::kS1, SeverityLevel::kS2, SeverityLevel::kS3, SeverityLevel::kS4};

// S1 -> (1.2, 0.8), S2 -> (1.4, 0.8), S3 -> (1.8, 0.4), S4 -> (2.0, 0.4).
PerturbationParams params_for(SeverityLevel s);

// "S1".."S4".
std::string to_string(SeverityLevel s);

// Parses "S1".."S4" (case-insensitive). Throws InvalidArgument naming the
// valid labels otherwise.
SeverityLevel parse_severity(std::string_view label);

}  // namespace dysaug

#endif  // DYSAUG_SEVERITY_H_
