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

#ifndef DYSAUG_UTF8_H_
#define DYSAUG_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace dysaug::utf8 {

// Decodes UTF-8 into Unicode scalar values. Ill-formed sequences decode to
// U+FFFD one byte at a time.
std::u32string decode(std::string_view s);

std::string encode(char32_t c);
std::string encode(std::u32string_view s);

// Splits on runs of ASCII whitespace.
std::vector<std::string> split_whitespace(std::string_view s);

// Trims ASCII whitespace and collapses internal runs to a single space.
std::string normalize_whitespace(std::string_view s);

// Removes tatweel (U+0640) and Arabic diacritics (U+064B..U+065F, U+0670).
std::string strip_arabic_marks(std::string_view s);

}  // namespace dysaug::utf8

#endif  // DYSAUG_UTF8_H_
