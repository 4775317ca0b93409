// Copyright 2026 The eur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EUR_ERROR_HPP
#define EUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eur {

enum class ErrorCode {
  NotHermitian,
  NotFinite,
  NotPsd,
  NotComplete,
  NotDoublyStochastic,
  ParamOutOfRange,
  DimensionMismatch,
  MassMismatch,
  EnumerationCapExceeded,
  AlphaOutOfRange,
  NonpositiveLogArgument,
  UnsupportedRegime,
  ParseError,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; `code()` lets
// callers (and the CLI exit-code mapping) branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eur

#endif  // EUR_ERROR_HPP
