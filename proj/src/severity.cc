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

#include "dysaug/severity.h"

#include <cctype>

#include "dysaug/error.h"

namespace dysaug {

PerturbationParams params_for(SeverityLevel s) {
  switch (s) {
    case SeverityLevel::kS1: return {SpeedFactor(1.2), TempoFactor(0.8), s};
    case SeverityLevel::kS2: return {SpeedFactor(1.4), TempoFactor(0.8), s};
    case SeverityLevel::kS3: return {SpeedFactor(1.8), TempoFactor(0.4), s};
    case SeverityLevel::kS4: return {SpeedFactor(2.0), TempoFactor(0.4), s};
  }
  throw InvalidArgument("unknown severity level");
}

std::string to_string(SeverityLevel s) {
  return "S" + std::to_string(static_cast<int>(s));
}

SeverityLevel parse_severity(std::string_view label) {
  if (label.size() == 2 && (label[0] == 'S' || label[0] == 's') && label[1] >= '1' &&
      label[1] <= '4')
    return static_cast<SeverityLevel>(label[1] - '0');
  throw InvalidArgument("unknown severity '" + std::string(label) +
                        "'; valid severities are S1, S2, S3, S4");
}

}  // namespace dysaug
