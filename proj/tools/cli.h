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

#ifndef DYSAUG_TOOLS_CLI_H_
#define DYSAUG_TOOLS_CLI_H_

#include <iosfwd>

namespace dysaug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // some input or output file failed
inline constexpr int kExitUsage = 2;    // bad flags; nothing was touched

// Entry point behind the dysaug executable. Data goes to `out`, diagnostics
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dysaug::cli

#endif  // DYSAUG_TOOLS_CLI_H_
