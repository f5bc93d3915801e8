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

#include "dysaug/waveform.h"

#include <algorithm>
#include <string>

#include "dysaug/error.h"

namespace dysaug {

void validate(const Waveform& w, bool require_samples) {
  if (w.sample_rate <= 0)
    throw InvalidArgument("sample_rate must be positive, got " +
                          std::to_string(w.sample_rate));
  if (require_samples && w.samples.empty())
    throw InvalidArgument("waveform has no samples");
}

void clip(std::vector<float>& samples) {
  for (float& s : samples) s = std::clamp(s, -1.0f, 1.0f);
}

}  // namespace dysaug
