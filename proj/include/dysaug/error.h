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

#ifndef DYSAUG_ERROR_H_
#define DYSAUG_ERROR_H_

#include <stdexcept>
#include <string>

namespace dysaug {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong with this input" catch this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value outside its documented range (factors, configs, empty inputs).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Failure reading or writing audio containers.
class AudioError : public Error {
 public:
  enum class Kind { kMissingFile, kMalformedHeader, kUnsupportedCodec, kUnwritable };

  AudioError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Malformed manifest, dictionary, or confusion-matrix files.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace dysaug

#endif  // DYSAUG_ERROR_H_
