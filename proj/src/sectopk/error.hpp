// Copyright 2026 The sectopk Authors
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

#ifndef SECTOPK_ERROR_HPP
#define SECTOPK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sectopk {

enum class ErrorCode {
  InvalidArgument,
  InvalidCurve,
  CurveTooLarge,
  NegativeScalar,
  EncodingFailure,
  InfinityPoint,
  EmptyKey,
  EmptyBatch,
  DuplicateSigner,
  MissingSigner,
  NonAsciiCharacter,
  LengthMismatch,
  MalformedFrame,
  MalformedHeader,
  MalformedImage,
  InsufficientCapacity,
  ConfigError,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C boundary can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sectopk

#endif  // SECTOPK_ERROR_HPP
